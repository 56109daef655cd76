//! Plain-text form of Laurent polynomials: a signed sum of terms such as
//! `3*u^2*t`, `-u^-1` or `7`. Exponent `1` is written without `^`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::laurent::LaurentPoly;
use super::PolyError;

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut factors: Vec<String> = Vec::new();
            for (v, &a) in self.vars().iter().zip(e.iter()) {
                match a {
                    0 => {}
                    1 => factors.push(v.clone()),
                    _ => factors.push(format!("{}^{}", v, a)),
                }
            }
            if factors.is_empty() {
                write!(f, "{}", abs)?;
            } else {
                if !abs.is_one() {
                    write!(f, "{}*", abs)?;
                }
                write!(f, "{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
}

fn tokenize(s: &str) -> Result<Vec<Tok>, PolyError> {
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' | '\n' => i += 1,
            '+' => {
                out.push(Tok::Plus);
                i += 1
            }
            '-' => {
                out.push(Tok::Minus);
                i += 1
            }
            '*' => {
                out.push(Tok::Star);
                i += 1
            }
            '^' => {
                out.push(Tok::Caret);
                i += 1
            }
            d if d.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let text: String = chars[start..i].iter().collect();
                out.push(Tok::Int(text.parse().expect("digits")));
            }
            a if a.is_ascii_alphabetic() || a == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push(Tok::Ident(chars[start..i].iter().collect()));
            }
            other => return Err(PolyError::Parse(format!("unexpected character {other:?}"))),
        }
    }
    Ok(out)
}

type RawTerm = (BigInt, Vec<(String, i64)>);

fn parse_terms(s: &str) -> Result<Vec<RawTerm>, PolyError> {
    let toks = tokenize(s)?;
    let mut pos = 0;
    let mut terms = Vec::new();
    if toks.is_empty() {
        return Err(PolyError::Parse("empty polynomial".into()));
    }
    loop {
        let mut sign = BigInt::one();
        // leading sign on the first term, mandatory separator afterwards
        match toks.get(pos) {
            Some(Tok::Plus) => pos += 1,
            Some(Tok::Minus) => {
                sign = -sign;
                pos += 1
            }
            _ if terms.is_empty() => {}
            Some(t) => return Err(PolyError::Parse(format!("expected '+' or '-', found {t:?}"))),
            None => break,
        }
        let mut coeff = sign;
        let mut factors = Vec::new();
        loop {
            match toks.get(pos) {
                Some(Tok::Int(k)) => {
                    coeff *= k;
                    pos += 1;
                }
                Some(Tok::Ident(name)) => {
                    pos += 1;
                    let mut exp = 1i64;
                    if toks.get(pos) == Some(&Tok::Caret) {
                        pos += 1;
                        let neg = if toks.get(pos) == Some(&Tok::Minus) {
                            pos += 1;
                            true
                        } else {
                            false
                        };
                        match toks.get(pos) {
                            Some(Tok::Int(k)) => {
                                let k: i64 = k
                                    .try_into()
                                    .map_err(|_| PolyError::Parse("exponent too large".into()))?;
                                exp = if neg { -k } else { k };
                                pos += 1;
                            }
                            _ => return Err(PolyError::Parse("expected exponent after '^'".into())),
                        }
                    }
                    factors.push((name.clone(), exp));
                }
                other => return Err(PolyError::Parse(format!("expected factor, found {other:?}"))),
            }
            if toks.get(pos) == Some(&Tok::Star) {
                pos += 1;
            } else {
                break;
            }
        }
        terms.push((coeff, factors));
        if pos >= toks.len() {
            break;
        }
    }
    Ok(terms)
}

impl LaurentPoly {
    /// Parses the text form. With `vars = None` the variables are the names
    /// that occur, in lexicographic order; a name outside an explicit list is
    /// an error.
    pub fn parse(s: &str, vars: Option<&[&str]>) -> Result<Self, PolyError> {
        let terms = parse_terms(s)?;
        let vars: Vec<String> = match vars {
            Some(v) => v.iter().map(|s| s.to_string()).collect(),
            None => {
                let names: BTreeSet<&String> =
                    terms.iter().flat_map(|(_, fs)| fs.iter().map(|(n, _)| n)).collect();
                names.into_iter().cloned().collect()
            }
        };
        let mut p = LaurentPoly::zero(&vars);
        for (c, fs) in terms {
            let mut e = vec![0i64; vars.len()];
            for (name, a) in fs {
                let idx = vars
                    .iter()
                    .position(|v| *v == name)
                    .ok_or_else(|| PolyError::MissingVariable(name.clone()))?;
                e[idx] += a;
            }
            p.add_term(e, c);
        }
        Ok(p)
    }
}

impl FromStr for LaurentPoly {
    type Err = PolyError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.trim() == "0" {
            return Ok(LaurentPoly::zero::<&str>(&[]));
        }
        LaurentPoly::parse(s, None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn prints_canonical_form() {
        let p = LaurentPoly::parse("u^2 + 1 - 3*u*t + t^-2", Some(&["u", "t"])).unwrap();
        assert_eq!(p.to_string(), "t^-2 + 1 - 3*u*t + u^2");
        assert_eq!(LaurentPoly::zero(&["u"]).to_string(), "0");
        assert_eq!(LaurentPoly::constant(&["u"], -4).to_string(), "-4");
    }

    #[test]
    fn parse_errors() {
        assert!(LaurentPoly::parse("u +", None).is_err());
        assert!(LaurentPoly::parse("u ^", None).is_err());
        assert!(LaurentPoly::parse("u $ t", None).is_err());
        assert!(LaurentPoly::parse("v", Some(&["u"])).is_err());
        assert!(LaurentPoly::parse("", None).is_err());
    }

    #[test]
    fn coefficient_products_and_repeats() {
        let p = LaurentPoly::parse("2*3*u*u", Some(&["u"])).unwrap();
        assert_eq!(p, LaurentPoly::monomial(&["u"], &[2], 6));
    }

    fn small_poly() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec(((-3i64..4, -3i64..4), -5i64..6), 0..8).prop_map(|ts| {
            LaurentPoly::from_terms(
                &["u", "t"],
                ts.into_iter().map(|((a, b), c)| (vec![a, b], BigInt::from(c))),
            )
        })
    }

    proptest! {
        #[test]
        fn text_round_trip(p in small_poly()) {
            let s = p.to_string();
            let back = LaurentPoly::parse(&s, Some(&["u", "t"])).unwrap();
            prop_assert_eq!(&back, &p);
            prop_assert_eq!(back.to_string(), s);
        }
    }

    #[test]
    fn zero_from_str() {
        let z: LaurentPoly = "0".parse().unwrap();
        assert!(z.is_zero());
        let z = LaurentPoly::parse("0", Some(&["u"])).unwrap();
        assert_eq!(z, LaurentPoly::zero(&["u"]));
    }
}
