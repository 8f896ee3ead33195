use super::Ideal;
use crate::error::{parse_err, Error, Result};
use crate::ring::RingHandle;

// True when `s` is `( ... )` with the first paren closing at the very end.
fn wrapped(s: &str) -> bool {
    if !(s.starts_with('(') && s.ends_with(')')) {
        return false;
    }
    let mut depth = 0i32;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth == 0 {
                    return i == s.len() - 1;
                }
            }
            _ => {}
        }
    }
    false
}

fn split_top_level(s: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&s[start..]);
    parts
}

pub(super) fn parse_ideal(ring: &RingHandle, s: &str) -> Result<Ideal> {
    let s = s.trim();
    if s.is_empty() {
        return Err(parse_err(s, "empty ideal literal"));
    }
    if let Some((l, r)) = ring.components() {
        let idx = s
            .find(")x(")
            .ok_or_else(|| parse_err(s, "expected a product ideal such as (4)x(9)"))?;
        let left = parse_ideal(l, &s[..=idx])?;
        let right = parse_ideal(r, &s[idx + 2..])?;
        return Ideal::pair(ring, left, right);
    }
    let body = if wrapped(s) { &s[1..s.len() - 1] } else { s };
    let mut acc = Ideal::zero(ring);
    for generator in split_top_level(body) {
        let generator = generator.trim();
        let x = ring.parse_element(generator)?;
        let principal = Ideal::principal(ring, &x).map_err(|e| match e {
            Error::Unsupported(_) | Error::Overflow(_) => {
                parse_err(generator, "generator must be a monomial times a unit")
            }
            other => other,
        })?;
        acc = acc.sum(&principal)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn literals_round_trip() {
        let cases = [
            ("Z/12", "(4)"),
            ("Z/12", "(0)"),
            ("Z", "(12)"),
            ("Z/4xZ/9", "(2)x(3)"),
            ("ZxZ", "(4)x(9)"),
            ("Zloc:5", "p^3"),
            ("Zloc:5", "(0)"),
            ("Zloc:5", "(1)"),
            ("Zinv:2", "(3)"),
            ("kxy", "x^2,x*y"),
            ("kxy", "x,y"),
            ("kxy", "(0)"),
            ("kxy", "(1)"),
        ];
        for (r, lit) in cases {
            let ring: RingHandle = r.parse().unwrap();
            let i = Ideal::parse(&ring, lit).unwrap();
            assert_eq!(i.to_string(), lit, "{r}");
            assert_eq!(Ideal::parse(&ring, &i.to_string()).unwrap(), i);
        }
    }

    #[test]
    fn canonicalizes() {
        let z12: RingHandle = "Z/12".parse().unwrap();
        assert_eq!(Ideal::parse(&z12, "(12)").unwrap().to_string(), "(0)");
        assert_eq!(Ideal::parse(&z12, "(8)").unwrap().to_string(), "(4)");
        assert_eq!(Ideal::parse(&RingHandle::Int, "(4,6)").unwrap().to_string(), "(2)");
        assert_eq!(Ideal::parse(&RingHandle::Int, "-12").unwrap().to_string(), "(12)");
        let inv: RingHandle = "Zinv:2".parse().unwrap();
        assert_eq!(Ideal::parse(&inv, "(12)").unwrap().to_string(), "(3)");
        let kxy = RingHandle::MonLoc;
        assert_eq!(Ideal::parse(&kxy, "(x^2, x*y*(1+y), x^3)").unwrap().to_string(), "x^2,x*y");
        assert_eq!(Ideal::parse(&kxy, "x, 1+x").unwrap().to_string(), "(1)");
    }

    #[test]
    fn rejects_bad_literals() {
        let kxy = RingHandle::MonLoc;
        let err = Ideal::parse(&kxy, "x+y").unwrap_err();
        assert!(err.to_string().contains("x+y"), "{err}");
        assert!(Ideal::parse(&kxy, "").is_err());
        let zz: RingHandle = "ZxZ".parse().unwrap();
        assert!(Ideal::parse(&zz, "(4)").is_err());
    }
}
