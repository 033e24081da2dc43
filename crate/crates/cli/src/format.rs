/// Shortest decimal that parses back to the same `f64`. Plain notation
/// for moderate magnitudes, exponent notation otherwise.
pub fn fmt_real(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return if x.is_nan() {
            "NaN".into()
        } else if x > 0.0 {
            "inf".into()
        } else {
            "-inf".into()
        };
    }
    let a = x.abs();
    if (1e-4..1e15).contains(&a) {
        format!("{x}")
    } else {
        format!("{x:e}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_strings() {
        assert_eq!(fmt_real(0.0), "0");
        assert_eq!(fmt_real(-0.0), "0");
        assert_eq!(fmt_real(0.1), "0.1");
        assert_eq!(fmt_real(5.0), "5");
        assert_eq!(fmt_real(1e-5), "1e-5");
        assert_eq!(fmt_real(-2.5e20), "-2.5e20");
        assert_eq!(fmt_real(f64::NAN), "NaN");
    }

    #[test]
    fn round_trips() {
        for x in [std::f64::consts::PI, 1.0 / 3.0, 6.02e23, -1.2345678901234567e-9, 1e-4, 9.99e14] {
            assert_eq!(fmt_real(x).parse::<f64>().unwrap(), x);
        }
    }
}
