use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;

use super::Cyclotomic;
use crate::error::{Error, Result};

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.conductor();
        let mut first = true;
        for (k, c) in self.terms() {
            let k = *k;
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if k == 0 {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c}*z({n})^{k}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::parse(format!("bad rational '{s}'"));
    match s.split_once('/') {
        Some((num, den)) => {
            let num: BigInt = num.parse().map_err(|_| bad())?;
            let den: BigInt = den.parse().map_err(|_| bad())?;
            if den.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(num, den))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

fn parse_term(term: &str) -> Result<(BigRational, u32, i64)> {
    match term.split_once("*z(") {
        None => Ok((parse_rational(term)?, 1, 0)),
        Some((coef, rest)) => {
            let bad = || Error::parse(format!("bad cyclotomic term '{term}'"));
            let (n, exp) = rest.split_once(")^").ok_or_else(bad)?;
            let n: u32 = n.parse().map_err(|_| bad())?;
            let exp: i64 = exp.parse().map_err(|_| bad())?;
            if n == 0 {
                return Err(bad());
            }
            Ok((parse_rational(coef)?, n, exp))
        }
    }
}

impl Cyclotomic {
    /// Parse the rendering produced by `Display`. The result lives in the
    /// smallest field containing every `z(n)` that appears.
    pub fn parse(text: &str) -> Result<Cyclotomic> {
        Self::parse_in(text, 1)
    }

    /// Parse and lift into `Q(ζ_n)`; every `z(m)` in the text must have `m | n`
    /// unless the text forces a larger field.
    pub fn parse_in(text: &str, n: u32) -> Result<Cyclotomic> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::parse("empty cyclotomic"));
        }
        let terms = compact
            .split('+')
            .map(parse_term)
            .collect::<Result<Vec<_>>>()?;
        let m = terms.iter().fold(n, |acc, t| acc.lcm(&t.1));
        let mut acc = Cyclotomic::zero(m);
        for (c, k, e) in terms {
            let root = Cyclotomic::root_of_unity(k, e).lift(m);
            acc = &acc + &root.scale(&c);
        }
        Ok(acc)
    }
}

impl FromStr for Cyclotomic {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Cyclotomic::parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::rational;

    #[test]
    fn rendering() {
        assert_eq!(Cyclotomic::zero(5).to_string(), "0");
        assert_eq!(Cyclotomic::from_int(5, -3).to_string(), "-3");
        let a = &Cyclotomic::root_of_unity(5, 1).scale(&rational(-1, 2)) + &Cyclotomic::from_int(5, 2);
        assert_eq!(a.to_string(), "2 + -1/2*z(5)^1");
        assert_eq!(Cyclotomic::parse_in(&a.to_string(), 5).unwrap(), a);
    }

    #[test]
    fn parse_lifts() {
        let a = Cyclotomic::parse("1*z(4)^1 + 1*z(3)^1").unwrap();
        assert_eq!(a.conductor(), 12);
        assert_eq!(Cyclotomic::parse_in("-1", 8).unwrap().conductor(), 8);
        assert!(Cyclotomic::parse("1*z(0)^1").is_err());
        assert!(Cyclotomic::parse("abc").is_err());
        assert!(Cyclotomic::parse("1/0").is_err());
    }
}
