use std::fmt;

use crate::arith::PrimePowerFactorization;
use crate::error::{GroupError, Result};

/// An invertible 2×2 matrix over the prime field of order `p`, acting on
/// column vectors.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Matrix2p {
    pub entries: [[u64; 2]; 2],
    pub p: u64,
}

impl Matrix2p {
    pub fn new(entries: [[u64; 2]; 2], p: u64) -> Result<Self> {
        let m = Matrix2p {
            entries: entries.map(|row| row.map(|x| x % p)),
            p,
        };
        if m.det() == 0 {
            return Err(GroupError::InvalidParameter(format!(
                "{m} is singular mod {p}"
            )));
        }
        Ok(m)
    }

    pub fn identity(p: u64) -> Self {
        Matrix2p {
            entries: [[1, 0], [0, 1]],
            p,
        }
    }

    /// `[[0, b], [1, a]]`, with characteristic polynomial `x² − a·x − b`.
    pub fn companion(a: u64, b: u64, p: u64) -> Self {
        Matrix2p {
            entries: [[0, b % p], [1, a % p]],
            p,
        }
    }

    pub fn det(&self) -> u64 {
        let [[a, b], [c, d]] = self.entries;
        (a * d % self.p + self.p - b * c % self.p) % self.p
    }

    pub fn trace(&self) -> u64 {
        (self.entries[0][0] + self.entries[1][1]) % self.p
    }

    pub fn mul(&self, other: &Matrix2p) -> Matrix2p {
        let p = self.p;
        let (x, y) = (self.entries, other.entries);
        let mut out = [[0u64; 2]; 2];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = (x[i][0] * y[0][j] + x[i][1] * y[1][j]) % p;
            }
        }
        Matrix2p { entries: out, p }
    }

    pub fn pow(&self, mut e: u64) -> Matrix2p {
        let mut base = *self;
        let mut acc = Matrix2p::identity(self.p);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        self.entries == [[1, 0], [0, 1]]
    }

    /// Image of the column vector `(x, y)`.
    pub fn apply(&self, x: u64, y: u64) -> (u64, u64) {
        let [[a, b], [c, d]] = self.entries;
        ((a * x + b * y) % self.p, (c * x + d * y) % self.p)
    }

    /// Whether `m` is exactly the multiplicative order.
    pub fn has_order(&self, m: u64) -> bool {
        if m == 0 || !self.pow(m).is_identity() {
            return false;
        }
        PrimePowerFactorization::of(m)
            .primes()
            .into_iter()
            .all(|q| !self.pow(m / q).is_identity())
    }

    /// Multiplicative order, by repeated multiplication.
    pub fn order(&self) -> u64 {
        let mut x = *self;
        let mut k = 1;
        while !x.is_identity() {
            x = x.mul(self);
            k += 1;
        }
        k
    }

    /// True when `x² − trace·x + det` has no root mod p, i.e. no invariant line.
    pub fn is_irreducible(&self) -> bool {
        let (t, d, p) = (self.trace(), self.det(), self.p);
        (0..p).all(|r| (r * r % p + p - t * r % p + d) % p != 0)
    }
}

impl fmt::Display for Matrix2p {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [[a, b], [c, d]] = self.entries;
        write!(f, "[[{a},{b}],[{c},{d}]]")
    }
}

impl fmt::Debug for Matrix2p {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} mod {}", self.p)
    }
}

fn companions(p: u64) -> impl Iterator<Item = Matrix2p> {
    (0..p).flat_map(move |a| (1..p).map(move |b| Matrix2p::companion(a, b, p)))
}

/// First companion matrix `[[0, b], [1, a]]` in lexicographic `(a, b)` order with
/// exact order `m` and irreducible characteristic polynomial.
pub fn find_irreducible_element(p: u64, m: u64) -> Result<Matrix2p> {
    check_field(p)?;
    if m == 0 || !(p * p - 1).is_multiple_of(m) {
        return Err(GroupError::InvalidParameter(format!(
            "{m} does not divide {p}^2 - 1"
        )));
    }
    companions(p)
        .find(|c| c.is_irreducible() && c.has_order(m))
        .ok_or_else(|| {
            GroupError::NotFound(format!("no irreducible element of order {m} in GL(2,{p})"))
        })
}

/// First companion matrix in lexicographic `(a, b)` order with exact order `m`.
pub fn find_element_of_order(p: u64, m: u64) -> Result<Matrix2p> {
    check_field(p)?;
    if m == 1 {
        return Ok(Matrix2p::identity(p));
    }
    companions(p)
        .find(|c| c.has_order(m))
        .ok_or_else(|| GroupError::NotFound(format!("no companion matrix of order {m} mod {p}")))
}

fn check_field(p: u64) -> Result<()> {
    if !crate::arith::is_prime(p) || p > 251 {
        return Err(GroupError::InvalidParameter(format!(
            "{p} is not a supported prime"
        )));
    }
    Ok(())
}
