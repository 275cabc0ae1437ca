//! Decimal rendering with a fixed count of significant digits.

/// Formats `x` with 17 significant digits.
///
/// Positional notation for decimal exponents in `[-5, 16]`, otherwise
/// `d.dddde±x`. The output parses back to the same `f64`.
pub fn sig17(x: f64) -> String {
    significant(x, 17)
}

pub fn significant(x: f64, digits: usize) -> String {
    assert!(digits >= 1);
    if !x.is_finite() {
        return format!("{x}");
    }
    if x == 0.0 {
        return if digits == 1 {
            "0".to_string()
        } else {
            format!("0.{}", "0".repeat(digits - 1))
        };
    }
    let sci = format!("{:.*e}", digits - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent marker");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-5..=16).contains(&exp) {
        return sci;
    }
    let (sign, mantissa) = match mantissa.strip_prefix('-') {
        Some(m) => ("-", m),
        None => ("", mantissa),
    };
    let digits_only: String = mantissa.chars().filter(|c| *c != '.').collect();
    let body = if exp < 0 {
        format!("0.{}{}", "0".repeat((-exp - 1) as usize), digits_only)
    } else {
        let split = exp as usize + 1;
        if split >= digits_only.len() {
            format!("{}{}", digits_only, "0".repeat(split - digits_only.len()))
        } else {
            format!("{}.{}", &digits_only[..split], &digits_only[split..])
        }
    };
    format!("{sign}{body}")
}
