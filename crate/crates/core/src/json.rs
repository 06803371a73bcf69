//! Deterministic JSON output: object keys sorted, floats rounded to 12
//! decimal places and printed in shortest form (`2`, `-1.414213562373`).

use std::io;

use serde::Serialize;
use serde_json::ser::{CompactFormatter, Formatter};

/// Decimal places kept for every float.
pub const FLOAT_DECIMALS: i32 = 12;

struct FixedFloats;

impl Formatter for FixedFloats {
    fn write_f64<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f64) -> io::Result<()> {
        if !value.is_finite() {
            return CompactFormatter.write_null(writer);
        }
        writer.write_all(format_float(value).as_bytes())
    }

    fn write_f32<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f32) -> io::Result<()> {
        self.write_f64(writer, value as f64)
    }
}

/// Rounds to [`FLOAT_DECIMALS`] places; negative zero prints as `0`.
pub fn format_float(value: f64) -> String {
    let scale = 10f64.powi(FLOAT_DECIMALS);
    let rounded = (value * scale).round() / scale;
    if rounded == 0.0 {
        "0".to_owned()
    } else {
        format!("{rounded}")
    }
}

/// Serializes with sorted keys and fixed float formatting.
pub fn to_string<T: Serialize>(value: &T) -> serde_json::Result<String> {
    // routing through Value sorts object keys (BTreeMap-backed maps)
    let value = serde_json::to_value(value)?;
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, FixedFloats);
    value.serialize(&mut ser)?;
    Ok(String::from_utf8(buf).expect("serde_json writes UTF-8"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn floats_and_keys() {
        let v = json!({"b": [2.0, -0.0, 1e-17, std::f64::consts::SQRT_2], "a": 3});
        assert_eq!(
            to_string(&v).unwrap(),
            r#"{"a":3,"b":[2,0,0,1.414213562373]}"#
        );
        assert_eq!(format_float(-1.0 / 3.0), "-0.333333333333");
    }
}
