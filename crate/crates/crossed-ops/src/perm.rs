//! Permutations of `{1, …, n}` and the operad structure of the symmetric
//! groups.
//!
//! Permutations are stored in one-line notation, 1-indexed: `images[i-1]` is
//! the image of `i`. The degree is the length of `images`, so the degree-0
//! permutation is the (unique) empty one.

use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

impl Permutation {
    /// Builds a permutation from its one-line images.
    ///
    /// Panics if `images` is not a bijection of `{1, …, n}`.
    pub fn new(images: Vec<usize>) -> Self {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            assert!(
                v >= 1 && v <= n && !seen[v - 1],
                "not a permutation of 1..={n}: {images:?}"
            );
            seen[v - 1] = true;
        }
        Permutation { images }
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    /// The adjacent transposition swapping `i` and `i + 1` inside `{1, …, n}`.
    pub fn transposition(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i + 1 <= n, "transposition out of range");
        let mut images: Vec<usize> = (1..=n).collect();
        images.swap(i - 1, i);
        Permutation { images }
    }

    /// The order reversal `i ↦ n − i + 1`.
    pub fn reversal(n: usize) -> Self {
        Permutation {
            images: (1..=n).rev().collect(),
        }
    }

    /// The cyclic rotation `i ↦ i + 1` (mod n, 1-indexed).
    pub fn rotation(n: usize) -> Self {
        if n == 0 {
            return Permutation::identity(0);
        }
        let images = (1..=n).map(|i| i % n + 1).collect();
        Permutation { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// Image of `i` (1-indexed).
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v - 1] = i + 1;
        }
        Permutation { images }
    }

    /// Function composition `self ∘ other`: the result sends `i` to
    /// `self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(
            self.degree(),
            other.degree(),
            "compose: degree mismatch {} vs {}",
            self.degree(),
            other.degree()
        );
        Permutation {
            images: other.images.iter().map(|&v| self.images[v - 1]).collect(),
        }
    }

    /// All permutations of degree `n` in lexicographic order of their
    /// one-line images. The identity always comes first.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut current: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Permutation {
                images: current.clone(),
            });
            // next lexicographic permutation
            let i = match (1..current.len()).rev().find(|&i| current[i - 1] < current[i]) {
                Some(i) => i,
                None => break,
            };
            let j = (i..current.len())
                .rev()
                .find(|&j| current[j] > current[i - 1])
                .unwrap();
            current.swap(i - 1, j);
            current[i..].reverse();
        }
        out
    }
}

/// Order reversal `β_n` as a free function, matching the notation used by the
/// wreath restriction formula.
pub fn beta(n: usize) -> Permutation {
    Permutation::reversal(n)
}

/// `β_n^ε`: reversal when `flip` is set, identity otherwise.
pub fn beta_pow(n: usize, flip: bool) -> Permutation {
    if flip {
        Permutation::reversal(n)
    } else {
        Permutation::identity(n)
    }
}

/// Operad composition of the symmetric groups.
///
/// `gamma_sym(σ; σ_1, …, σ_n)` is the permutation of `{1, …, k_1 + ⋯ + k_n}`
/// obtained by letting each `σ_i` act inside its block and then rearranging
/// the blocks according to `σ`: block `i` (of width `k_i`) lands at block
/// position `σ(i)` of the target, whose position `p` has width `k_{σ⁻¹(p)}`.
pub fn gamma_sym(sigma: &Permutation, blocks: &[Permutation]) -> Permutation {
    let n = sigma.degree();
    assert_eq!(blocks.len(), n, "gamma_sym: expected {n} blocks");
    let widths: Vec<usize> = blocks.iter().map(|b| b.degree()).collect();
    let total: usize = widths.iter().sum();
    let inv = sigma.inverse();
    // target offset of block position p (1-indexed)
    let mut toff = vec![0usize; n + 1];
    let mut acc = 0;
    for p in 1..=n {
        toff[p] = acc;
        acc += widths[inv.apply(p) - 1];
    }
    let mut images = vec![0usize; total];
    let mut soff = 0;
    for i in 1..=n {
        let w = widths[i - 1];
        let t = toff[sigma.apply(i)];
        for j in 1..=w {
            images[soff + j - 1] = t + blocks[i - 1].apply(j);
        }
        soff += w;
    }
    Permutation { images }
}

/// `gamma_sym(σ; id_{w_1}, …, id_{w_n})`: the block rearrangement induced by
/// `σ` on blocks of the given widths.
pub fn block_induced(sigma: &Permutation, widths: &[usize]) -> Permutation {
    assert_eq!(
        widths.len(),
        sigma.degree(),
        "block_induced: widths length mismatch"
    );
    let blocks: Vec<Permutation> = widths.iter().map(|&w| Permutation::identity(w)).collect();
    gamma_sym(sigma, &blocks)
}
