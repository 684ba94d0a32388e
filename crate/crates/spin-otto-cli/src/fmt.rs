//! Deterministic numeric rendering for CSV and report output.
//!
//! All floating-point values are printed with twelve significant digits,
//! switching between fixed and scientific notation the way C's `%.12g`
//! does, with trailing zeros trimmed. Formatting goes through the standard
//! library only, so identical inputs always yield identical bytes — this is
//! what makes sweep output reproducible across runs and thread counts.

/// Renders `value` with twelve significant digits.
///
/// Fixed notation is used when the decimal exponent lies in `[-4, 12)`,
/// scientific notation (two-digit, sign-prefixed exponent) otherwise.
/// Trailing zeros and a dangling decimal point are trimmed, and both zeros
/// render as `"0"`.
pub fn g12(value: f64) -> String {
    if value == 0.0 {
        return "0".to_string();
    }
    let sci = format!("{value:.11e}");
    let (mantissa, exponent) = sci
        .split_once('e')
        .expect("scientific formatting always contains an exponent");
    let exponent: i32 = exponent.parse().expect("exponent is a small integer");
    if (-4..12).contains(&exponent) {
        let decimals = (11 - exponent).max(0) as usize;
        let fixed = format!("{value:.decimals$}");
        fixed.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        let mantissa = mantissa.trim_end_matches('0').trim_end_matches('.');
        let sign = if exponent < 0 { '-' } else { '+' };
        format!("{mantissa}e{sign}{:02}", exponent.unsigned_abs())
    }
}

#[cfg(test)]
mod tests {
    use super::g12;

    #[test]
    fn zeros_render_bare() {
        assert_eq!(g12(0.0), "0");
        assert_eq!(g12(-0.0), "0");
    }

    #[test]
    fn integers_drop_the_decimal_point() {
        assert_eq!(g12(1.0), "1");
        assert_eq!(g12(6.0), "6");
        assert_eq!(g12(-4.0), "-4");
        assert_eq!(g12(123456789012.0), "123456789012");
    }

    #[test]
    fn short_fractions_trim_trailing_zeros() {
        assert_eq!(g12(0.75), "0.75");
        assert_eq!(g12(0.5), "0.5");
        assert_eq!(g12(4.05), "4.05");
        assert_eq!(g12(2.82), "2.82");
        assert_eq!(g12(0.0001), "0.0001");
    }

    #[test]
    fn long_fractions_round_to_twelve_significant_digits() {
        assert_eq!(g12(0.651595484568901), "0.651595484569");
        assert_eq!(g12(0.868793979425202), "0.868793979425");
        assert_eq!(g12(-0.217198494856300), "-0.217198494856");
        assert_eq!(g12(-0.241006895018954), "-0.241006895019");
        assert_eq!(g12(20.615528128088304), "20.6155281281");
    }

    #[test]
    fn extreme_magnitudes_use_scientific_notation() {
        assert_eq!(g12(1e-5), "1e-05");
        assert_eq!(g12(1.5e-13), "1.5e-13");
        assert_eq!(g12(1e12), "1e+12");
        assert_eq!(g12(1234567890123.0), "1.23456789012e+12");
        assert_eq!(g12(-2.5e-17), "-2.5e-17");
    }
}
