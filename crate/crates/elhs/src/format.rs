//! Number formatting shared by the file writers and the CLI.

/// Positional decimal with exactly 17 significant digits, enough to read
/// back the same `f64` bit for bit. Zero prints as `0.0`.
pub fn sig17(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x:?}");
    }
    // "d.dddddddddddddddde-X"
    let sci = format!("{:.16e}", x.abs());
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    let digits: String = mantissa.chars().filter(|c| *c != '.').collect();
    let sign = if x < 0.0 { "-" } else { "" };
    if exp < 0 {
        let zeros = "0".repeat((-exp - 1) as usize);
        format!("{sign}0.{zeros}{digits}")
    } else {
        let split = (exp as usize + 1).min(digits.len());
        let (int, frac) = digits.split_at(split);
        let pad = "0".repeat(exp as usize + 1 - split);
        if frac.is_empty() {
            format!("{sign}{int}{pad}.0")
        } else {
            format!("{sign}{int}.{frac}")
        }
    }
}

/// At least 12 significant digits, never fewer than 12 decimals:
/// `1.0` prints as `1.000000000000`.
pub fn sig12(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x:.12}");
    }
    let mag = x.abs().log10().floor() as i32;
    let decimals = (11 - mag).max(12) as usize;
    format!("{x:.decimals$}")
}
