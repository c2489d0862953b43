//! Deterministic number formatting for report tables: 6 significant digits,
//! plain notation for ordinary magnitudes, scientific otherwise. Full
//! precision lives in the parallel JSON reports.

/// Format with 6 significant digits. NaN prints as `NA` (the table
/// convention for unavailable statistics).
pub fn sig6(x: f64) -> String {
    sig(x, 6)
}

pub fn sig(x: f64, digits: u32) -> String {
    if x.is_nan() {
        return "NA".to_string();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf" } else { "-inf" }.to_string();
    }
    if x == 0.0 {
        return "0".to_string();
    }
    let digits = digits.max(1);
    let mag = x.abs().log10().floor() as i32;
    // Plain decimal while the rounded form stays readable.
    if mag >= -4 && mag < digits as i32 + 3 {
        let decimals = (digits as i32 - 1 - mag).max(0) as usize;
        let s = format!("{x:.decimals$}");
        trim_zeros(&s)
    } else {
        format!("{:.*e}", digits as usize - 1, x)
    }
}

fn trim_zeros(s: &str) -> String {
    if !s.contains('.') {
        return s.to_string();
    }
    let t = s.trim_end_matches('0').trim_end_matches('.');
    if t.is_empty() || t == "-" {
        "0".to_string()
    } else {
        t.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plain_magnitudes() {
        assert_eq!(sig6(0.0), "0");
        assert_eq!(sig6(1.0), "1");
        assert_eq!(sig6(-0.730), "-0.73");
        assert_eq!(sig6(0.582), "0.582");
        assert_eq!(sig6(123.456789), "123.457");
        assert_eq!(sig6(35895.0), "35895");
        assert_eq!(sig6(-17879.123), "-17879.1");
        assert_eq!(sig6(1.909090909), "1.90909");
    }

    #[test]
    fn extreme_magnitudes_go_scientific() {
        assert_eq!(sig6(1.23456789e-7), "1.23457e-7");
        assert_eq!(sig6(9.87e12), "9.87e12");
    }

    #[test]
    fn non_finite() {
        assert_eq!(sig6(f64::NAN), "NA");
        assert_eq!(sig6(f64::INFINITY), "inf");
    }
}
