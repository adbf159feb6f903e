//! Canonical text form: terms in descending degree joined by `+`, e.g.
//! `x^4+x^3+3*x^2+2*x+2`. Extension-field coefficients print as
//! `[c0,c1,...]`, ascending in `t`. The parser also accepts `-`, a missing
//! `*`, whitespace, and a bare ascending coefficient list `2,2,3,1,1`.

use std::fmt;

use super::Poly;
use crate::error::{Error, Result};
use crate::field::Field;

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let field = self.field();
        let mut first = true;
        for (i, &c) in self.coeffs().iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str("+")?;
            }
            first = false;
            let coef = field.fmt_raw(c);
            match (i, c) {
                (0, _) => f.write_str(&coef)?,
                (1, 1) => f.write_str("x")?,
                (1, _) => write!(f, "{coef}*x")?,
                (_, 1) => write!(f, "x^{i}")?,
                _ => write!(f, "{coef}*x^{i}")?,
            }
        }
        Ok(())
    }
}

fn parse_coeff(field: &Field, s: &str) -> Result<u64> {
    let err = || Error::Parse(format!("bad coefficient `{s}`"));
    if let Some(inner) = s.strip_prefix('[') {
        let inner = inner.strip_suffix(']').ok_or_else(err)?;
        let digits = inner.split(',').map(|d| d.parse::<u64>().map_err(|_| err())).collect::<Result<Vec<u64>>>()?;
        Ok(field.from_digits(&digits)?.raw())
    } else {
        let n: u128 = s.parse().map_err(|_| err())?;
        Ok((n % field.p() as u128) as u64)
    }
}

/// Split on `sep` outside brackets.
fn split_top(s: &str, seps: &[char]) -> Vec<(char, String)> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    let mut sign = '+';
    for ch in s.chars() {
        match ch {
            '[' => depth += 1,
            ']' => depth -= 1,
            _ => {}
        }
        if depth == 0 && seps.contains(&ch) {
            parts.push((sign, std::mem::take(&mut cur)));
            sign = ch;
        } else {
            cur.push(ch);
        }
    }
    parts.push((sign, cur));
    parts
}

impl Poly {
    /// Parse the canonical text form or a comma-separated ascending list.
    pub fn parse(field: &Field, text: &str) -> Result<Poly> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        if !s.contains('x') {
            let items = split_top(&s, &[',']);
            if items.len() > 1 {
                let coeffs = items.iter().map(|(_, item)| parse_coeff(field, item)).collect::<Result<Vec<u64>>>()?;
                return Ok(Poly::from_raw(field.clone(), coeffs));
            }
        }
        let mut acc = Poly::zero(field);
        for (idx, (sign, term)) in split_top(&s, &['+', '-']).into_iter().enumerate() {
            if term.is_empty() {
                if idx == 0 {
                    continue;
                }
                return Err(Error::Parse(format!("empty term in `{text}`")));
            }
            let (coef, degree) = match term.find('x') {
                None => (parse_coeff(field, &term)?, 0),
                Some(pos) => {
                    let coef_part = term[..pos].trim_end_matches('*');
                    let coef = if coef_part.is_empty() { 1 } else { parse_coeff(field, coef_part)? };
                    let rest = &term[pos + 1..];
                    let degree = if rest.is_empty() {
                        1
                    } else {
                        let exp = rest.strip_prefix('^').ok_or_else(|| Error::Parse(format!("bad term `{term}`")))?;
                        exp.parse::<usize>().map_err(|_| Error::Parse(format!("bad exponent `{exp}`")))?
                    };
                    (coef, degree)
                }
            };
            let coef = if sign == '-' { field.neg(coef) } else { coef };
            let mut coeffs = vec![0; degree + 1];
            coeffs[degree] = coef;
            acc = &acc + &Poly::from_raw(field.clone(), coeffs);
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn formats_canonically() {
        let f5 = Field::prime(5).unwrap();
        let p = Poly::from_ints(&f5, &[2, 2, 3, 1, 1]);
        assert_eq!(p.to_string(), "x^4+x^3+3*x^2+2*x+2");
        assert_eq!(Poly::zero(&f5).to_string(), "0");
        assert_eq!(Poly::from_ints(&f5, &[0, 1]).to_string(), "x");
        let f9 = Field::extension(3, 2).unwrap();
        let t = f9.from_digits(&[0, 1]).unwrap();
        assert_eq!(Poly::linear(&t).to_string(), "x+[0,2]");
    }

    #[test]
    fn parses_variants() {
        let f5 = Field::prime(5).unwrap();
        let expected = Poly::from_ints(&f5, &[2, 2, 3, 1, 1]);
        for s in ["x^4+x^3+3*x^2+2*x+2", "x^4 + x^3 + 3x^2 + 2x + 2", "2,2,3,1,1", "x^4+x^3-2x^2-3x+7"] {
            assert_eq!(Poly::parse(&f5, s).unwrap(), expected, "{s}");
        }
        assert_eq!(Poly::parse(&f5, "3").unwrap(), Poly::from_ints(&f5, &[3]));
        assert_eq!(Poly::parse(&f5, "-x^2+1").unwrap(), Poly::from_ints(&f5, &[1, 0, -1]));
        assert!(Poly::parse(&f5, "x^").is_err());
        assert!(Poly::parse(&f5, "y+1").is_err());
        assert!(Poly::parse(&f5, "").is_err());
        let f9 = Field::extension(3, 2).unwrap();
        let p = Poly::parse(&f9, "x^2+[0,1]*x+[2,1]").unwrap();
        assert_eq!(p.coeff(1), f9.from_digits(&[0, 1]).unwrap());
        assert_eq!(Poly::parse(&f9, "[2,1],[0,1],1").unwrap(), p);
    }

    fn field_strategy() -> impl Strategy<Value = Field> {
        prop_oneof![
            Just(Field::prime(5).unwrap()),
            Just(Field::prime(101).unwrap()),
            Just(Field::extension(3, 2).unwrap()),
            Just(Field::extension(5, 3).unwrap()),
        ]
    }

    proptest! {
        #[test]
        fn parse_format_round_trip(field in field_strategy(), idx in proptest::collection::vec(0u64..1_000_000, 0..12)) {
            let coeffs: Vec<u64> = idx.iter().map(|i| field.from_index(i % field.q())).collect();
            let p = Poly::from_raw(field.clone(), coeffs);
            prop_assert_eq!(Poly::parse(&field, &p.to_string()).unwrap(), p);
        }
    }
}
