//! Dense matrices over arbitrary-precision rationals.
//!
//! No floating point anywhere: entries are exact `BigRational`s, and rank
//! computations run plain Gaussian elimination with pivot selection that
//! prefers ±1 entries to keep intermediate fractions small.

use num::rational::BigRational;
use num::{BigInt, One, Signed, Zero};

pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    BigRational::from_integer(BigInt::from(n))
}

pub fn rat_frac(p: i64, q: i64) -> Rat {
    assert!(q != 0, "zero denominator");
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `p` or `p/q` with `q > 0`; canonicalizes to lowest terms.
pub fn parse_rat(text: &str) -> Result<Rat, String> {
    let text = text.trim();
    if let Some((p, q)) = text.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|e| format!("bad numerator: {e}"))?;
        let q: BigInt = q.trim().parse().map_err(|e| format!("bad denominator: {e}"))?;
        if q <= BigInt::zero() {
            return Err(format!("denominator must be positive in `{text}`"));
        }
        Ok(BigRational::new(p, q))
    } else {
        let p: BigInt = text.parse().map_err(|e| format!("bad rational `{text}`: {e}"))?;
        Ok(BigRational::from_integer(p))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rat>,
}

impl RationalMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            entries: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RationalMatrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> Rat) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        RationalMatrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> &Rat {
        &self.entries[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Rat) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn add_to(&mut self, r: usize, c: usize, v: &Rat) {
        if !v.is_zero() {
            let e = &mut self.entries[r * self.cols + c];
            *e += v;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    /// Matrix product `self · other`, skipping zero entries.
    pub fn mul(&self, other: &RationalMatrix) -> RationalMatrix {
        assert_eq!(
            self.cols, other.rows,
            "matrix product shape mismatch: {}x{} · {}x{}",
            self.rows, self.cols, other.rows, other.cols
        );
        let mut out = RationalMatrix::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let e = &mut out.entries[r * other.cols + c];
                    *e += a * b;
                }
            }
        }
        out
    }

    pub fn scaled(&self, s: &Rat) -> RationalMatrix {
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e * s).collect(),
        }
    }

    pub fn add(&self, other: &RationalMatrix) -> RationalMatrix {
        assert_eq!(self.rows, other.rows);
        assert_eq!(self.cols, other.cols);
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(other.entries.iter())
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Kronecker product: `(A ⊗ B)[(r1, r2), (c1, c2)] = A[r1, c1] B[r2, c2]`.
    pub fn kronecker(&self, other: &RationalMatrix) -> RationalMatrix {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut out = RationalMatrix::zero(rows, cols);
        for r1 in 0..self.rows {
            for c1 in 0..self.cols {
                let a = self.get(r1, c1);
                if a.is_zero() {
                    continue;
                }
                for r2 in 0..other.rows {
                    for c2 in 0..other.cols {
                        let b = other.get(r2, c2);
                        if b.is_zero() {
                            continue;
                        }
                        out.set(r1 * other.rows + r2, c1 * other.cols + c2, a * b);
                    }
                }
            }
        }
        out
    }

    /// Rank over the rationals by Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut m = self.entries.clone();
        let (rows, cols) = (self.rows, self.cols);
        let at = |m: &Vec<Rat>, r: usize, c: usize| -> Rat { m[r * cols + c].clone() };
        let mut rank = 0;
        let mut pivot_row = 0;
        for col in 0..cols {
            if pivot_row >= rows {
                break;
            }
            // prefer a ±1 pivot to limit coefficient growth
            let mut choice: Option<usize> = None;
            for r in pivot_row..rows {
                let v = &m[r * cols + col];
                if v.is_zero() {
                    continue;
                }
                if v.numer().magnitude() == v.denom().magnitude() {
                    choice = Some(r);
                    break;
                }
                if choice.is_none() {
                    choice = Some(r);
                }
            }
            let Some(r) = choice else { continue };
            m.swap_chunks(r, pivot_row, cols);
            let pivot = at(&m, pivot_row, col);
            for rr in (pivot_row + 1)..rows {
                let lead = at(&m, rr, col);
                if lead.is_zero() {
                    continue;
                }
                let factor = &lead / &pivot;
                for cc in col..cols {
                    let sub = &factor * &m[pivot_row * cols + cc];
                    if !sub.is_zero() {
                        m[rr * cols + cc] -= sub;
                    }
                }
            }
            pivot_row += 1;
            rank += 1;
        }
        rank
    }
}

trait SwapChunks {
    fn swap_chunks(&mut self, a: usize, b: usize, width: usize);
}

impl SwapChunks for Vec<Rat> {
    fn swap_chunks(&mut self, a: usize, b: usize, width: usize) {
        if a == b {
            return;
        }
        for i in 0..width {
            self.swap(a * width + i, b * width + i);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_canonicalize() {
        assert_eq!(parse_rat("4/6").unwrap(), rat_frac(2, 3));
        assert_eq!(parse_rat("-3").unwrap(), rat(-3));
        assert_eq!(parse_rat(" 7 / 14 ").unwrap(), rat_frac(1, 2));
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("1/-2").is_err());
        assert!(parse_rat("x").is_err());
    }

    #[test]
    fn product_and_identity() {
        let a = RationalMatrix::from_fn(2, 3, |r, c| rat((r * 3 + c) as i64));
        let id = RationalMatrix::identity(3);
        assert_eq!(a.mul(&id), a);
        let b = RationalMatrix::from_fn(3, 2, |r, c| rat((r + c) as i64));
        let ab = a.mul(&b);
        assert_eq!(ab.rows(), 2);
        assert_eq!(ab.cols(), 2);
        // hand-checked entry: row 1 of a is (3,4,5), col 0 of b is (0,1,2)
        assert_eq!(*ab.get(1, 0), rat(4 + 10));
    }

    #[test]
    fn rank_examples() {
        assert_eq!(RationalMatrix::identity(4).rank(), 4);
        assert_eq!(RationalMatrix::zero(3, 5).rank(), 0);
        // rank-1 outer product
        let m = RationalMatrix::from_fn(3, 3, |r, c| rat(((r + 1) * (c + 1)) as i64));
        assert_eq!(m.rank(), 1);
        // fractions
        let m = RationalMatrix::from_fn(2, 2, |r, c| {
            if (r, c) == (1, 1) {
                rat_frac(1, 3)
            } else {
                rat(1)
            }
        });
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn kronecker_shapes_and_values() {
        let a = RationalMatrix::from_fn(2, 2, |r, c| rat((r * 2 + c) as i64));
        let id = RationalMatrix::identity(2);
        let k = a.kronecker(&id);
        assert_eq!(k.rows(), 4);
        assert_eq!(*k.get(0, 0), rat(0));
        assert_eq!(*k.get(2, 0), rat(2));
        assert_eq!(*k.get(3, 1), rat(3));
        assert_eq!(*k.get(2, 1), rat(0));
    }
}
