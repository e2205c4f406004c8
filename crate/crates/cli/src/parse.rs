//! Value parsers for the compact argument formats `a:b` and `a:b:c:d`.

use std::str::FromStr;

fn fields<T: FromStr>(s: &str, sep: char, what: &str) -> Result<Vec<T>, String> {
    s.split(sep)
        .map(|p| p.trim().parse::<T>().map_err(|_| format!("invalid {what} component '{p}' in '{s}'")))
        .collect()
}

fn finite(xs: &[f64], s: &str) -> Result<(), String> {
    if xs.iter().all(|x| x.is_finite()) {
        Ok(())
    } else {
        Err(format!("non-finite value in '{s}'"))
    }
}

/// `a:b`
pub fn parse_interval(s: &str) -> Result<(f64, f64), String> {
    let v: Vec<f64> = fields(s, ':', "interval")?;
    finite(&v, s)?;
    match v[..] {
        [a, b] => Ok((a, b)),
        _ => Err(format!("expected a:b, got '{s}'")),
    }
}

/// `sigma_lo:sigma_hi:t_lo:t_hi`
pub fn parse_box(s: &str) -> Result<(f64, f64, f64, f64), String> {
    let v: Vec<f64> = fields(s, ':', "box")?;
    finite(&v, s)?;
    match v[..] {
        [a, b, c, d] => Ok((a, b, c, d)),
        _ => Err(format!("expected sigma_lo:sigma_hi:t_lo:t_hi, got '{s}'")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn intervals() {
        assert_eq!(parse_interval("10:50"), Ok((10.0, 50.0)));
        assert_eq!(parse_interval("-1.5:2e1"), Ok((-1.5, 20.0)));
        assert!(parse_interval("10").is_err());
        assert!(parse_interval("10:x").is_err());
        assert!(parse_interval("1:2:3").is_err());
        assert!(parse_interval("1:inf").is_err());
    }

    #[test]
    fn boxes() {
        assert_eq!(parse_box("0.5:1:80:90"), Ok((0.5, 1.0, 80.0, 90.0)));
        assert!(parse_box("0.5:1:80").is_err());
    }
}
