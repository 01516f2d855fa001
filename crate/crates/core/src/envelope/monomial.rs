use std::cmp::Ordering;

use crate::basis::{GradedBasis, Parity};
use crate::error::{AlgebraError, Result};
use crate::scalar::Scalar;

/// A generator occurrence inside a monomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub index: usize,
    pub parity: Parity,
}

impl Letter {
    pub fn of(basis: &GradedBasis, index: usize) -> Letter {
        Letter {
            index,
            parity: basis.parity(index),
        }
    }
}

/// A basis element of the PBW model `V(M)`.
///
/// * `Unit` spans degree 0.
/// * `Word` is an ordered word `e_{r1} ... e_{rn}` of length 1 to 3 with
///   `r1 <= r2 <= r3` and strict increase between consecutive odd letters;
///   these span the supersymmetric powers `S^n(M)`.
/// * `Pair(u, v)` is the formal tensor `u ⊗ v` spanning degree
///   `deg u + deg v > 3`. Different bracketings are different basis
///   elements.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Monomial {
    Unit,
    Word(Vec<Letter>),
    Pair(Box<Monomial>, Box<Monomial>),
}

impl Monomial {
    /// An ordered word; fails if `letters` is not a PBW word.
    pub fn word(letters: Vec<Letter>) -> Result<Monomial> {
        if letters.is_empty() || letters.len() > 3 {
            return Err(AlgebraError::InvalidInput(format!(
                "PBW words have length 1 to 3, got {}",
                letters.len()
            )));
        }
        for w in letters.windows(2) {
            let ordered = w[0].index < w[1].index
                || (w[0].index == w[1].index && w[0].parity == Parity::Even);
            if !ordered {
                return Err(AlgebraError::InvalidInput(format!(
                    "letters {} and {} are not in PBW order",
                    w[0].index, w[1].index
                )));
            }
        }
        Ok(Monomial::Word(letters))
    }

    pub fn generator(letter: Letter) -> Monomial {
        Monomial::Word(vec![letter])
    }

    /// The formal tensor `left ⊗ right`; both factors must have positive
    /// degree and the total degree must exceed 3.
    pub fn pair(left: Monomial, right: Monomial) -> Result<Monomial> {
        let (dl, dr) = (left.degree(), right.degree());
        if dl == 0 || dr == 0 || dl + dr <= 3 {
            return Err(AlgebraError::InvalidInput(format!(
                "tensor pairs need positive factor degrees summing above 3, got ({dl}, {dr})"
            )));
        }
        Ok(Monomial::Pair(Box::new(left), Box::new(right)))
    }

    pub fn degree(&self) -> usize {
        match self {
            Monomial::Unit => 0,
            Monomial::Word(w) => w.len(),
            Monomial::Pair(l, r) => l.degree() + r.degree(),
        }
    }

    pub fn parity(&self) -> Parity {
        self.letters()
            .iter()
            .fold(Parity::Even, |acc, l| acc + l.parity)
    }

    /// All letters from left to right, ignoring the bracketing.
    pub fn letters(&self) -> Vec<Letter> {
        let mut out = Vec::with_capacity(self.degree());
        self.collect_letters(&mut out);
        out
    }

    fn collect_letters(&self, out: &mut Vec<Letter>) {
        match self {
            Monomial::Unit => {}
            Monomial::Word(w) => out.extend_from_slice(w),
            Monomial::Pair(l, r) => {
                l.collect_letters(out);
                r.collect_letters(out);
            }
        }
    }

    /// Juxtaposed generator names for words, `(u . v)` for pairs, `1` for
    /// the unit.
    pub fn render(&self, basis: &GradedBasis) -> String {
        match self {
            Monomial::Unit => "1".to_string(),
            Monomial::Word(w) => w.iter().map(|l| basis.name(l.index)).collect(),
            Monomial::Pair(l, r) => format!("({} . {})", l.render(basis), r.render(basis)),
        }
    }
}

/// Degree, then parity word, then generator indices, then for pairs the
/// degree of the left factor and the factors themselves.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let (la, lb) = (self.letters(), other.letters());
        la.len()
            .cmp(&lb.len())
            .then_with(|| {
                la.iter()
                    .map(|l| l.parity)
                    .cmp(lb.iter().map(|l| l.parity))
            })
            .then_with(|| la.iter().map(|l| l.index).cmp(lb.iter().map(|l| l.index)))
            .then_with(|| match (self, other) {
                (Monomial::Pair(l1, r1), Monomial::Pair(l2, r2)) => l1
                    .degree()
                    .cmp(&l2.degree())
                    .then_with(|| l1.cmp(l2))
                    .then_with(|| r1.cmp(r2)),
                (Monomial::Pair(..), _) => Ordering::Greater,
                (_, Monomial::Pair(..)) => Ordering::Less,
                _ => Ordering::Equal,
            })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Brings a word of at most three letters to PBW order inside the
/// supersymmetric algebra `S(M)`. Every transposition of two odd letters
/// contributes a factor `-1`; a repeated odd letter makes the word vanish
/// (`None`).
pub fn sym_normalize(word: &[Letter]) -> Result<Option<(Scalar, Monomial)>> {
    if word.len() > 3 {
        return Err(AlgebraError::NotApplicable(word.len()));
    }
    if word.is_empty() {
        return Ok(Some((Scalar::one(), Monomial::Unit)));
    }
    let mut letters = word.to_vec();
    let mut odd_swaps = false;
    // insertion sort, never swapping equal letters
    for i in 1..letters.len() {
        let mut j = i;
        while j > 0 && letters[j - 1].index > letters[j].index {
            if letters[j - 1].parity.is_odd() && letters[j].parity.is_odd() {
                odd_swaps = !odd_swaps;
            }
            letters.swap(j - 1, j);
            j -= 1;
        }
    }
    if letters
        .windows(2)
        .any(|w| w[0].index == w[1].index && w[0].parity.is_odd())
    {
        return Ok(None);
    }
    Ok(Some((Scalar::sign(odd_swaps), Monomial::Word(letters))))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn even(i: usize) -> Letter {
        Letter {
            index: i,
            parity: Parity::Even,
        }
    }

    fn odd(i: usize) -> Letter {
        Letter {
            index: i,
            parity: Parity::Odd,
        }
    }

    #[test]
    fn normalize_examples() {
        let (s, m) = sym_normalize(&[odd(5), odd(4)]).unwrap().unwrap();
        assert_eq!(s, -Scalar::one());
        assert_eq!(m, Monomial::Word(vec![odd(4), odd(5)]));
        assert_eq!(sym_normalize(&[odd(4), odd(4)]).unwrap(), None);
        let (s, m) = sym_normalize(&[even(1), even(2)]).unwrap().unwrap();
        assert_eq!(s, Scalar::one());
        assert_eq!(m, Monomial::Word(vec![even(1), even(2)]));
        assert_eq!(
            sym_normalize(&[even(1); 4]),
            Err(AlgebraError::NotApplicable(4))
        );
    }

    #[test]
    fn normalize_mixed_parity_moves_freely() {
        // x5 a1 x4 -> a1 x4 x5 with one odd-odd swap
        let (s, m) = sym_normalize(&[odd(5), even(1), odd(4)]).unwrap().unwrap();
        assert_eq!(s, -Scalar::one());
        assert_eq!(m.letters(), vec![even(1), odd(4), odd(5)]);
        // x4 a1 x4 vanishes after sorting
        assert_eq!(sym_normalize(&[odd(4), even(1), odd(4)]).unwrap(), None);
        // even letters may repeat
        let (s, _) = sym_normalize(&[even(2), even(2), even(0)]).unwrap().unwrap();
        assert_eq!(s, Scalar::one());
    }

    #[test]
    fn word_invariants() {
        assert!(Monomial::word(vec![even(1), even(1)]).is_ok());
        assert!(Monomial::word(vec![odd(4), odd(4)]).is_err());
        assert!(Monomial::word(vec![even(2), even(1)]).is_err());
        assert!(Monomial::word(vec![]).is_err());
        let w2 = Monomial::word(vec![even(0), even(1)]).unwrap();
        let w1 = Monomial::generator(odd(3));
        assert!(Monomial::pair(w2.clone(), w1.clone()).is_err());
        let w3 = Monomial::word(vec![even(0), even(0), odd(3)]).unwrap();
        let p = Monomial::pair(w3, w1).unwrap();
        assert_eq!(p.degree(), 4);
        assert_eq!(p.parity(), Parity::Even);
    }

    #[test]
    fn ordering_puts_parity_word_before_indices() {
        let ee = Monomial::word(vec![even(1), even(2)]).unwrap();
        let eo = Monomial::word(vec![even(0), odd(5)]).unwrap();
        assert!(ee < eo);
        assert!(Monomial::Unit < Monomial::generator(even(7)));
    }
}
