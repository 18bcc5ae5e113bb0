//! Affine rational points and their `x,y` text form.

use std::fmt;
use std::str::FromStr;

use crate::rational::{parse_rational, Rational, RationalParseError};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point { x, y }
    }

    /// The same point with coordinates exchanged.
    pub fn swapped(&self) -> Self {
        Point::new(self.y.clone(), self.x.clone())
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}, {}", self.x, self.y)
    }
}

impl FromStr for Point {
    type Err = RationalParseError;

    /// Accepts `x,y` with optional surrounding parentheses.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let (x, y) = inner
            .split_once(',')
            .ok_or_else(|| RationalParseError::Invalid(s.trim().to_string()))?;
        Ok(Point::new(parse_rational(x)?, parse_rational(y)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    #[test]
    fn parse_and_print() {
        let p: Point = "-99/101, 20/101".parse().unwrap();
        assert_eq!(p, Point::new(frac(-99, 101), frac(20, 101)));
        assert_eq!(p.to_string(), "-99/101, 20/101");
        assert_eq!("(9,10)".parse::<Point>().unwrap(), Point::new(int(9), int(10)));
        assert!("9".parse::<Point>().is_err());
        assert!("9,x".parse::<Point>().is_err());
    }
}
