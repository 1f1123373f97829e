//! The braid group operad.
//!
//! Words in the Artin generators, with equality decided through the faithful
//! action on a free group: generator `σ_i` maps `x_i ↦ x_i x_{i+1} x_i⁻¹`,
//! `x_{i+1} ↦ x_i`, and fixes the rest. Operadic composition cables the
//! outer word through the widths of the inputs, tracking how the widths
//! permute as letters are consumed; the exact letter ordering inside a block
//! crossing is internal and validated by the projection contract and the
//! interchange property.

use crate::operad::{Operad, OperadOverSym, PointedOperad};
use crate::perm::Permutation;
use rand::Rng;
use std::fmt;

/// A braid word: `strands` and a sequence of signed generator indices
/// (`±1, …, ±(strands − 1)`); `1 2 -1` means `σ_1 σ_2 σ_1⁻¹`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl fmt::Debug for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "braid[{}|", self.strands)?;
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, "]")
    }
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Self {
        for &l in &letters {
            let idx = l.unsigned_abs() as usize;
            assert!(
                l != 0 && idx + 1 <= strands,
                "letter {l} out of range for {strands} strands"
            );
        }
        BraidWord { strands, letters }
    }

    pub fn identity(strands: usize) -> Self {
        BraidWord {
            strands,
            letters: Vec::new(),
        }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    /// Concatenation (group multiplication; `self` applied after `other`
    /// under the permutation projection convention used here).
    pub fn concat(&self, other: &BraidWord) -> BraidWord {
        assert_eq!(self.strands, other.strands, "strand mismatch");
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        BraidWord {
            strands: self.strands,
            letters,
        }
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    /// Parses the CLI syntax: space-separated signed integers.
    pub fn parse(strands: usize, text: &str) -> Result<Self, String> {
        let mut letters = Vec::new();
        for tok in text.split_whitespace() {
            let l: i32 = tok.parse().map_err(|e| format!("bad letter {tok}: {e}"))?;
            let idx = l.unsigned_abs() as usize;
            if l == 0 || idx + 1 > strands {
                return Err(format!("letter {l} out of range for {strands} strands"));
            }
            letters.push(l);
        }
        Ok(BraidWord { strands, letters })
    }
}

/// A reduced word in a free group: signed generator indices with no adjacent
/// letter–inverse pairs.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct FreeWord(Vec<i32>);

impl FreeWord {
    pub fn generator(i: usize) -> Self {
        FreeWord(vec![i as i32])
    }

    pub fn push(&mut self, letter: i32) {
        if self.0.last() == Some(&-letter) {
            self.0.pop();
        } else {
            self.0.push(letter);
        }
    }

    pub fn extend_word(&mut self, other: &FreeWord) {
        for &l in &other.0 {
            self.push(l);
        }
    }

    pub fn letters(&self) -> &[i32] {
        &self.0
    }
}

/// Images of the `n` free generators under the automorphism a braid word
/// induces: the identity word gives `(x_1, …, x_n)`; letters act from the
/// right (rightmost letter first), matching the permutation projection.
pub fn artin_action(b: &BraidWord) -> Vec<FreeWord> {
    let n = b.strands;
    let mut images: Vec<FreeWord> = (1..=n).map(FreeWord::generator).collect();
    for &letter in b.letters.iter().rev() {
        let i = letter.unsigned_abs() as usize;
        let mut next = Vec::with_capacity(n);
        for image in &images {
            // substitute each generator occurrence through the letter's
            // automorphism
            let mut w = FreeWord::default();
            for &l in image.letters() {
                let g = l.unsigned_abs() as usize;
                let positive = l > 0;
                let replacement: Vec<i32> = if letter > 0 {
                    // σ_i: x_i ↦ x_i x_{i+1} x_i⁻¹, x_{i+1} ↦ x_i
                    if g == i {
                        vec![i as i32, (i + 1) as i32, -(i as i32)]
                    } else if g == i + 1 {
                        vec![i as i32]
                    } else {
                        vec![g as i32]
                    }
                } else {
                    // σ_i⁻¹: x_i ↦ x_{i+1}, x_{i+1} ↦ x_{i+1}⁻¹ x_i x_{i+1}
                    if g == i {
                        vec![(i + 1) as i32]
                    } else if g == i + 1 {
                        vec![-((i + 1) as i32), i as i32, (i + 1) as i32]
                    } else {
                        vec![g as i32]
                    }
                };
                if positive {
                    for &r in &replacement {
                        w.push(r);
                    }
                } else {
                    for &r in replacement.iter().rev() {
                        w.push(-r);
                    }
                }
            }
            next.push(w);
        }
        images = next;
    }
    images
}

/// Word-problem equality through the faithful free-group action.
pub fn braid_equal(b1: &BraidWord, b2: &BraidWord) -> bool {
    assert_eq!(b1.strands, b2.strands, "strand mismatch");
    artin_action(b1) == artin_action(b2)
}

/// The canonical projection to the symmetric group: each letter becomes the
/// adjacent transposition of its index.
pub fn braid_to_perm(b: &BraidWord) -> Permutation {
    let mut acc = Permutation::identity(b.strands);
    for &letter in &b.letters {
        let i = letter.unsigned_abs() as usize;
        acc = acc.compose(&Permutation::transposition(b.strands, i));
    }
    acc
}

pub fn is_pure(b: &BraidWord) -> bool {
    braid_to_perm(b).is_identity()
}

/// The positive block crossing moving a block of `a` strands over a block of
/// `b` strands, both sitting after `offset` strands. Strand `offset+a` moves
/// first; within each pass the crossings are emitted so the rightmost letter
/// applies first.
fn block_crossing(offset: usize, a: usize, b: usize) -> Vec<i32> {
    let mut passes: Vec<Vec<i32>> = Vec::new();
    for j in (1..=a).rev() {
        // move the strand at position offset + j rightwards over b strands
        passes.push((0..b).rev().map(|t| (offset + j + t) as i32).collect());
    }
    // passes are in application order (j = a first); the word reads
    // leftmost-applied-last, so reverse the pass order
    let mut out = Vec::with_capacity(a * b);
    for pass in passes.into_iter().rev() {
        out.extend(pass);
    }
    out
}

/// Operadic composition by cabling.
///
/// The inputs are shifted into their strand blocks and applied first; the
/// outer word is cabled letter by letter, each letter crossing the two
/// adjacent blocks it meets under the current width vector, which permutes
/// as letters are consumed. The projection contract
/// `braid_to_perm(γ(b; b_1, …)) == gamma_sym(braid_to_perm(b); …)` pins the
/// convention.
pub fn braid_gamma(b: &BraidWord, inputs: &[BraidWord]) -> BraidWord {
    let n = b.strands;
    assert_eq!(inputs.len(), n, "braid_gamma: expected {n} inputs");
    let widths: Vec<usize> = inputs.iter().map(|w| w.strands).collect();
    let total: usize = widths.iter().sum();

    // cable the outer word: walk letters from the last (applied first),
    // tracking the current widths
    let mut cur = widths.clone();
    let mut pieces: Vec<Vec<i32>> = Vec::new();
    for &letter in b.letters.iter().rev() {
        let p = letter.unsigned_abs() as usize;
        let offset: usize = cur[..p - 1].iter().sum();
        let piece = if letter > 0 {
            block_crossing(offset, cur[p - 1], cur[p])
        } else {
            // the left block passes under: invert the positive crossing of
            // the transposed widths, so the projection is still the block
            // swap of (cur[p-1], cur[p])
            block_crossing(offset, cur[p], cur[p - 1])
                .into_iter()
                .rev()
                .map(|l| -l)
                .collect()
        };
        pieces.push(piece);
        cur.swap(p - 1, p);
    }
    let mut letters: Vec<i32> = Vec::new();
    for piece in pieces.into_iter().rev() {
        letters.extend(piece);
    }

    // the blocks apply first: append them after the cabled outer word
    let mut offset = 0;
    for input in inputs {
        letters.extend(input.letters.iter().map(|&l| {
            if l > 0 {
                l + offset as i32
            } else {
                l - offset as i32
            }
        }));
        offset += input.strands;
    }
    BraidWord {
        strands: total,
        letters,
    }
}

/// The braid operad: elements of arity `n` are braid words on `n` strands.
#[derive(Debug, Clone, Default)]
pub struct BraidOperad;

pub fn braid_operad() -> BraidOperad {
    BraidOperad
}

impl Operad for BraidOperad {
    type Elem = BraidWord;

    fn name(&self) -> String {
        "braid".into()
    }

    fn arity(&self, x: &BraidWord) -> usize {
        x.strands
    }

    fn identity(&self) -> BraidWord {
        BraidWord::identity(1)
    }

    fn gamma(&self, x: &BraidWord, inputs: &[BraidWord]) -> BraidWord {
        braid_gamma(x, inputs)
    }

    fn equal(&self, a: &BraidWord, b: &BraidWord) -> bool {
        braid_equal(a, b)
    }

    fn try_elems(&self, _n: usize) -> Option<Vec<BraidWord>> {
        None
    }
}

impl OperadOverSym for BraidOperad {
    fn to_sym(&self, x: &BraidWord) -> Permutation {
        braid_to_perm(x)
    }
}

impl PointedOperad for BraidOperad {
    fn base(&self, n: usize) -> BraidWord {
        BraidWord::identity(n)
    }
}

impl crate::operad::GroupOperad for BraidOperad {
    fn mul(&self, a: &BraidWord, b: &BraidWord) -> BraidWord {
        a.concat(b)
    }

    fn inv(&self, a: &BraidWord) -> BraidWord {
        a.inverse()
    }
}

/// A uniformly random word of length ≤ `max_len` on the given strands.
pub fn random_word<R: Rng>(strands: usize, max_len: usize, rng: &mut R) -> BraidWord {
    if strands <= 1 {
        return BraidWord::identity(strands);
    }
    let len = rng.gen_range(0..=max_len);
    let letters = (0..len)
        .map(|_| {
            let i = rng.gen_range(1..strands) as i32;
            if rng.gen_bool(0.5) {
                i
            } else {
                -i
            }
        })
        .collect();
    BraidWord::new(strands, letters)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::gamma_sym;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn artin_action_examples() {
        // identity automorphism
        let images = artin_action(&BraidWord::identity(3));
        assert_eq!(
            images,
            vec![
                FreeWord::generator(1),
                FreeWord::generator(2),
                FreeWord::generator(3)
            ]
        );
        // cancellation
        let w = BraidWord::new(2, vec![1, -1]);
        assert_eq!(artin_action(&w), artin_action(&BraidWord::identity(2)));
        // braid relation on 3 strands
        let lhs = BraidWord::new(3, vec![1, 2, 1]);
        let rhs = BraidWord::new(3, vec![2, 1, 2]);
        assert_eq!(artin_action(&lhs), artin_action(&rhs));
        assert!(braid_equal(&lhs, &rhs));
        // and a negative case
        assert!(!braid_equal(
            &BraidWord::new(3, vec![1]),
            &BraidWord::new(3, vec![2])
        ));
    }

    #[test]
    fn artin_action_is_antihomomorphism_free_check() {
        // images under a single σ_1 on 2 strands
        let images = artin_action(&BraidWord::new(2, vec![1]));
        assert_eq!(images[0].letters(), &[1, 2, -1]);
        assert_eq!(images[1].letters(), &[1]);
        // inverse generator
        let images = artin_action(&BraidWord::new(2, vec![-1]));
        assert_eq!(images[0].letters(), &[2]);
        assert_eq!(images[1].letters(), &[-2, 1, 2]);
    }

    #[test]
    fn projection_examples() {
        assert_eq!(
            braid_to_perm(&BraidWord::new(2, vec![1])),
            Permutation::new(vec![2, 1])
        );
        // homomorphism under concatenation, random words
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..100 {
            let u = random_word(4, 4, &mut rng);
            let v = random_word(4, 4, &mut rng);
            assert_eq!(
                braid_to_perm(&u.concat(&v)),
                braid_to_perm(&u).compose(&braid_to_perm(&v))
            );
        }
        assert!(is_pure(&BraidWord::new(3, vec![1, 1])));
        assert!(!is_pure(&BraidWord::new(3, vec![1])));
    }

    #[test]
    #[should_panic(expected = "strand mismatch")]
    fn equality_requires_same_strands() {
        let _ = braid_equal(&BraidWord::identity(2), &BraidWord::identity(3));
    }

    #[test]
    fn gamma_examples() {
        // empty outer word on empty inputs
        let e = braid_gamma(
            &BraidWord::identity(2),
            &[BraidWord::identity(1), BraidWord::identity(2)],
        );
        assert_eq!(e, BraidWord::identity(3));
        // σ_1 on 2 strands with unit inputs of widths (1, 2) projects to
        // the block permutation [3, 1, 2]
        let g = braid_gamma(
            &BraidWord::new(2, vec![1]),
            &[BraidWord::identity(1), BraidWord::identity(2)],
        );
        assert_eq!(braid_to_perm(&g), Permutation::new(vec![3, 1, 2]));
    }

    /// The projection contract, on ≥ 200 seeded random instances.
    #[test]
    fn gamma_projection_contract() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let n = rng.gen_range(0..=3);
            let b = random_word(n, 3, &mut rng);
            let inputs: Vec<BraidWord> = (0..n)
                .map(|_| random_word(rng.gen_range(0..=3), 3, &mut rng))
                .collect();
            let composed = braid_gamma(&b, &inputs);
            let expected = gamma_sym(
                &braid_to_perm(&b),
                &inputs.iter().map(braid_to_perm).collect::<Vec<_>>(),
            );
            assert_eq!(braid_to_perm(&composed), expected);
        }
    }

    /// Operad associativity of the cabling on random nested inputs
    /// (arities ≤ 2, word lengths ≤ 2), equality through the free action.
    #[test]
    fn gamma_associativity_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..120 {
            let n = rng.gen_range(0..=2);
            let x = random_word(n, 2, &mut rng);
            let mid_widths: Vec<usize> = (0..n).map(|_| rng.gen_range(0..=2)).collect();
            let mids: Vec<BraidWord> = mid_widths
                .iter()
                .map(|&k| random_word(k, 2, &mut rng))
                .collect();
            let inner_widths: Vec<Vec<usize>> = mid_widths
                .iter()
                .map(|&k| (0..k).map(|_| rng.gen_range(0..=2)).collect())
                .collect();
            let inners: Vec<Vec<BraidWord>> = inner_widths
                .iter()
                .map(|ws| ws.iter().map(|&w| random_word(w, 2, &mut rng)).collect())
                .collect();
            let flat: Vec<BraidWord> = inners.iter().flatten().cloned().collect();
            let lhs = braid_gamma(&braid_gamma(&x, &mids), &flat);
            let composed: Vec<BraidWord> = mids
                .iter()
                .zip(inners.iter())
                .map(|(m, inn)| braid_gamma(m, inn))
                .collect();
            let rhs = braid_gamma(&x, &composed);
            assert!(braid_equal(&lhs, &rhs), "{x:?} ∘ {mids:?} ∘ {inners:?}");
        }
    }

    /// Interchange identity on random words (length ≤ 3, arities ≤ 3),
    /// equality through the free action.
    #[test]
    fn interchange_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        for _ in 0..200 {
            let n = rng.gen_range(0..=3);
            let x = random_word(n, 3, &mut rng);
            let y = random_word(n, 3, &mut rng);
            let ks: Vec<usize> = (0..n).map(|_| rng.gen_range(0..=3)).collect();
            let xs: Vec<BraidWord> = ks.iter().map(|&k| random_word(k, 3, &mut rng)).collect();
            let ys: Vec<BraidWord> = ks.iter().map(|&k| random_word(k, 3, &mut rng)).collect();
            let pairs: Vec<BraidWord> = xs
                .iter()
                .zip(ys.iter())
                .map(|(a, b)| a.concat(b))
                .collect();
            let lhs = braid_gamma(&x.concat(&y), &pairs);
            let y_inv = braid_to_perm(&y).inverse();
            let reindexed: Vec<BraidWord> =
                (1..=n).map(|i| xs[y_inv.apply(i) - 1].clone()).collect();
            let rhs = braid_gamma(&x, &reindexed).concat(&braid_gamma(&y, &ys));
            assert!(braid_equal(&lhs, &rhs));
        }
    }

    #[test]
    fn parse_round_trip() {
        let w = BraidWord::parse(3, "1 2 -1").unwrap();
        assert_eq!(w.letters(), &[1, 2, -1]);
        assert!(BraidWord::parse(2, "3").is_err());
        assert!(BraidWord::parse(2, "0").is_err());
    }
}
