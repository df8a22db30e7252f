//! Text form of polynomials.
//!
//! Grammar (whitespace insensitive):
//!
//! ```text
//! poly   :=  [sign] term { sign term }
//! term   :=  factor { "*" factor }
//! factor :=  integer [ "/" integer ]  |  variable [ "^" integer ]
//! ```
//!
//! Variables come from the caller-supplied list.  Every error carries the byte
//! offset where scanning failed, so `1/0*x` or `w^2` point at the offender.

use super::{Expo, MPoly, Rat};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::Zero;

struct Scanner<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Scanner<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek()?;
        self.pos += 1;
        Some(c)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.pos, msg: msg.into() })
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return self.err("expected an integer");
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        text.parse::<BigInt>().map_err(|e| Error::Parse { pos: start, msg: e.to_string() })
    }

    fn ident(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
        {
            self.pos += 1;
        }
        if self.pos == start {
            return self.err("expected a variable name");
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).unwrap().to_string())
    }
}

/// Parse `text` over the ordered variable list `vars`.
pub fn parse_poly(text: &str, vars: &[&str]) -> Result<MPoly> {
    let nvars = vars.len();
    let mut sc = Scanner { src: text.as_bytes(), pos: 0 };
    let mut poly = MPoly::zero(nvars);
    let mut first = true;
    loop {
        // Sign (optional for the first term).
        let mut negative = false;
        match sc.peek() {
            Some(b'+') => {
                sc.bump();
            }
            Some(b'-') => {
                sc.bump();
                negative = true;
            }
            None if first => return sc.err("empty polynomial"),
            None => return sc.err("dangling operator"),
            Some(_) if first => {}
            Some(c) => return sc.err(format!("expected '+' or '-', found '{}'", c as char)),
        }
        if sc.peek().is_none() {
            return sc.err("missing term after sign");
        }
        // One term: product of factors.
        let mut coeff = Rat::new(BigInt::from(if negative { -1 } else { 1 }), BigInt::from(1));
        let mut expo = vec![0u32; nvars];
        loop {
            match sc.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let num = sc.integer()?;
                    let den = if sc.peek() == Some(b'/') {
                        sc.bump();
                        let at = sc.pos;
                        let d = sc.integer()?;
                        if d.is_zero() {
                            return Err(Error::Parse { pos: at, msg: "zero denominator".into() });
                        }
                        d
                    } else {
                        BigInt::from(1)
                    };
                    coeff *= Rat::new(num, den);
                }
                Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                    let at = sc.pos;
                    let name = sc.ident()?;
                    let Some(idx) = vars.iter().position(|v| *v == name) else {
                        return Err(Error::Parse { pos: at, msg: format!("unknown variable '{name}'") });
                    };
                    let power = if sc.peek() == Some(b'^') {
                        sc.bump();
                        let at = sc.pos;
                        let p = sc.integer()?;
                        if p.is_zero() {
                            return Err(Error::Parse { pos: at, msg: "power must be positive".into() });
                        }
                        u32::try_from(&p).map_err(|_| Error::Parse {
                            pos: at,
                            msg: "power exceeds 2^31 bound".into(),
                        })?
                    } else {
                        1
                    };
                    if power > 1 << 31 {
                        return Err(Error::Parse { pos: at, msg: "power exceeds 2^31 bound".into() });
                    }
                    expo[idx] = expo[idx]
                        .checked_add(power)
                        .filter(|&e| e <= 1 << 31)
                        .ok_or_else(|| Error::Parse { pos: at, msg: "exponent exceeds 2^31 bound".into() })?;
                }
                _ => return sc.err("expected a coefficient or variable"),
            }
            if sc.peek() == Some(b'*') {
                sc.bump();
            } else {
                break;
            }
        }
        poly.add_term(Expo(expo), coeff);
        first = false;
        match sc.peek() {
            None => return Ok(poly),
            Some(b'+') | Some(b'-') => continue,
            Some(c) => return sc.err(format!("unexpected character '{}'", c as char)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::{rint, rq};
    use super::*;

    const XYZ: [&str; 3] = ["x", "y", "z"];

    #[test]
    fn parses_products_and_fractions() {
        let p = parse_poly("1/2*x^2 - 2*x*y + y*z", &XYZ).unwrap();
        assert_eq!(p.coeff(&[2, 0, 0]), rq(1, 2));
        assert_eq!(p.coeff(&[1, 1, 0]), rint(-2));
        assert_eq!(p.coeff(&[0, 1, 1]), rint(1));
        assert_eq!(p.nterms(), 3);
    }

    #[test]
    fn repeated_variables_accumulate() {
        let p = parse_poly("x*x*x", &XYZ).unwrap();
        assert_eq!(p.coeff(&[3, 0, 0]), rint(1));
    }

    #[test]
    fn leading_sign_and_cancellation() {
        let p = parse_poly("-x + 2*x - x", &XYZ).unwrap();
        assert!(p.is_zero());
    }

    #[test]
    fn error_positions() {
        match parse_poly("x + w", &XYZ) {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("expected parse error, got {other:?}"),
        }
        match parse_poly("1/0*x", &XYZ) {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(parse_poly("x^0", &XYZ).is_err());
        assert!(parse_poly("x +", &XYZ).is_err());
        assert!(parse_poly("", &XYZ).is_err());
    }

    #[test]
    fn serializer_round_trip() {
        let src = "x^2 - 2*x*y - 1/2";
        let p = parse_poly(src, &XYZ).unwrap();
        assert_eq!(p.to_string(), src);
        assert_eq!(parse_poly(&p.to_string(), &XYZ).unwrap(), p);
    }
}
