//! Exact arithmetic in Z[φ], φ² = φ + 1.

use std::cmp::Ordering;
use std::ops::{Add, Mul, Neg, Sub};

/// The number `a + b·φ`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Golden {
    pub a: i64,
    pub b: i64,
}

impl Golden {
    pub const ZERO: Golden = Golden { a: 0, b: 0 };
    pub const ONE: Golden = Golden { a: 1, b: 0 };
    pub const PHI: Golden = Golden { a: 0, b: 1 };

    pub const fn int(n: i64) -> Self {
        Golden { a: n, b: 0 }
    }

    /// Exact sign of `a + bφ`.
    ///
    /// With `2(a + bφ) = (2a + b) + b√5`, the sign is decided by comparing
    /// squares whenever the two summands disagree in sign.
    pub fn signum(self) -> i32 {
        let x = 2 * self.a + self.b;
        let y = self.b;
        match (x.cmp(&0), y.cmp(&0)) {
            (Ordering::Equal, Ordering::Equal) => 0,
            (Ordering::Less, Ordering::Greater) => {
                // √5·y > -x > 0
                if 5 * y * y > x * x {
                    1
                } else {
                    -1
                }
            }
            (Ordering::Greater, Ordering::Less) => {
                if x * x > 5 * y * y {
                    1
                } else {
                    -1
                }
            }
            (xs, ys) => {
                if xs == Ordering::Less || ys == Ordering::Less {
                    -1
                } else {
                    1
                }
            }
        }
    }

    pub fn is_zero(self) -> bool {
        self.a == 0 && self.b == 0
    }

    pub fn to_f64(self) -> f64 {
        self.a as f64 + self.b as f64 * (1.0 + 5f64.sqrt()) / 2.0
    }
}

impl Add for Golden {
    type Output = Golden;
    fn add(self, o: Golden) -> Golden {
        Golden { a: self.a + o.a, b: self.b + o.b }
    }
}

impl Sub for Golden {
    type Output = Golden;
    fn sub(self, o: Golden) -> Golden {
        Golden { a: self.a - o.a, b: self.b - o.b }
    }
}

impl Neg for Golden {
    type Output = Golden;
    fn neg(self) -> Golden {
        Golden { a: -self.a, b: -self.b }
    }
}

impl Mul for Golden {
    type Output = Golden;
    fn mul(self, o: Golden) -> Golden {
        // (a + bφ)(c + dφ) = (ac + bd) + (ad + bc + bd)φ
        Golden {
            a: self.a * o.a + self.b * o.b,
            b: self.a * o.b + self.b * o.a + self.b * o.b,
        }
    }
}
