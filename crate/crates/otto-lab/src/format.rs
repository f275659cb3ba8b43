//! Locale-independent number formatting with 12 significant digits.

const SIG_DIGITS: usize = 12;

/// Positional notation for decimal exponents in `[-5, 12)`, scientific
/// otherwise. Trailing zeros are kept so every value carries 12 digits.
pub fn fmt_num(x: f64) -> String {
    if !x.is_finite() {
        return String::new();
    }
    if x == 0.0 {
        return format!("0.{}", "0".repeat(SIG_DIGITS - 1));
    }
    let sci = format!("{:.*e}", SIG_DIGITS - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent marker");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-5..SIG_DIGITS as i32).contains(&exp) {
        return sci;
    }
    let digits: String = mantissa.chars().filter(char::is_ascii_digit).collect();
    let mut out = String::with_capacity(SIG_DIGITS + 8);
    if x < 0.0 {
        out.push('-');
    }
    if exp < 0 {
        out.push_str("0.");
        out.push_str(&"0".repeat((-exp - 1) as usize));
        out.push_str(&digits);
    } else {
        let int_len = exp as usize + 1;
        out.push_str(&digits[..int_len]);
        if int_len < SIG_DIGITS {
            out.push('.');
            out.push_str(&digits[int_len..]);
        }
    }
    out
}

/// Empty field for missing or non-finite values.
pub fn fmt_cell(x: Option<f64>) -> String {
    x.map(fmt_num).unwrap_or_default()
}
