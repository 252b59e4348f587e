use num_integer::Integer;
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Reduced rational number with positive denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fraction {
    num: i128,
    den: i128,
}

impl Fraction {
    pub const ZERO: Fraction = Fraction { num: 0, den: 1 };
    pub const ONE: Fraction = Fraction { num: 1, den: 1 };

    /// # Panics
    ///
    /// If `den == 0`.
    pub fn new(num: i128, den: i128) -> Self {
        assert!(den != 0, "zero denominator");
        let g = num.gcd(&den);
        let (mut num, mut den) = (num / g, den / g);
        if den < 0 {
            num = -num;
            den = -den;
        }
        Self { num, den }
    }

    pub fn integer(n: i128) -> Self {
        Self { num: n, den: 1 }
    }

    pub fn numer(&self) -> i128 {
        self.num
    }

    pub fn denom(&self) -> i128 {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }

    pub fn floor(&self) -> i128 {
        Integer::div_floor(&self.num, &self.den)
    }

    /// `self - floor(self)`, in `[0, 1)`.
    pub fn fract(&self) -> Self {
        *self - Self::integer(self.floor())
    }

    pub fn recip(&self) -> Self {
        Self::new(self.den, self.num)
    }

    /// Farey mediant `(a + c) / (b + d)` of `a/b` and `c/d`.
    pub fn mediant(&self, other: &Self) -> Self {
        Self::new(self.num + other.num, self.den + other.den)
    }
}

impl Default for Fraction {
    fn default() -> Self {
        Self::ZERO
    }
}

impl From<i64> for Fraction {
    fn from(n: i64) -> Self {
        Self::integer(n as i128)
    }
}

impl Ord for Fraction {
    fn cmp(&self, other: &Self) -> Ordering {
        let lhs = self.num.checked_mul(other.den).expect("fraction overflow");
        let rhs = other.num.checked_mul(self.den).expect("fraction overflow");
        lhs.cmp(&rhs)
    }
}

impl PartialOrd for Fraction {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for Fraction {
    type Output = Fraction;
    fn add(self, rhs: Self) -> Self {
        let l = self.den.lcm(&rhs.den);
        let a = self.num.checked_mul(l / self.den).expect("fraction overflow");
        let b = rhs.num.checked_mul(l / rhs.den).expect("fraction overflow");
        Fraction::new(a.checked_add(b).expect("fraction overflow"), l)
    }
}

impl Sub for Fraction {
    type Output = Fraction;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for Fraction {
    type Output = Fraction;
    fn neg(self) -> Self {
        Fraction {
            num: -self.num,
            den: self.den,
        }
    }
}

impl Mul for Fraction {
    type Output = Fraction;
    fn mul(self, rhs: Self) -> Self {
        let g1 = self.num.gcd(&rhs.den).max(1);
        let g2 = rhs.num.gcd(&self.den).max(1);
        let num = (self.num / g1).checked_mul(rhs.num / g2).expect("fraction overflow");
        let den = (self.den / g2).checked_mul(rhs.den / g1).expect("fraction overflow");
        Fraction::new(num, den)
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}
