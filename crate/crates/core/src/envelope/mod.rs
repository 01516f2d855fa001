//! The PBW model `Ṽ(M)` of the universal enveloping superalgebra of an
//! Akivis superalgebra `M`.
//!
//! As a graded space `V(M)` agrees with the supersymmetric algebra in
//! degrees up to three and is the sum of formal tensor pairs
//! `V^i ⊗ V^{n-i}` above. The product `*` is given on basis monomials by an
//! explicit case analysis in total degree at most three (where bracket and
//! ternary corrections appear) and by the formal tensor pair above. With
//! this product, generators satisfy exactly the relations of the enveloping
//! algebra, which [`Envelope::verify_embedding_relations`] checks.

mod element;
mod monomial;
mod term;
mod verify;

pub use element::EnvElement;
pub use monomial::{sym_normalize, Letter, Monomial};
pub use term::{associator_relation, bracket_relation, MagmaTerm};

use crate::akivis::AkivisSpec;
use crate::basis::Parity;
use crate::error::{AlgebraError, Result};
use crate::scalar::Scalar;
use crate::vector::Vector;

/// Environment variable overriding the default truncation degree.
pub const MAX_DEGREE_ENV: &str = "AKIVIS_MAX_DEGREE";

/// Bounds on the degree-by-degree computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TruncationPolicy {
    /// Any product or basis request above this degree is an error.
    pub max_degree: usize,
    /// Upper bound on monomials materialized by a single operation.
    pub max_monomials: usize,
}

impl Default for TruncationPolicy {
    fn default() -> Self {
        TruncationPolicy {
            max_degree: 4,
            max_monomials: 1 << 20,
        }
    }
}

impl TruncationPolicy {
    pub fn with_max_degree(max_degree: usize) -> Self {
        TruncationPolicy {
            max_degree,
            ..Default::default()
        }
    }

    /// Default policy, with `max_degree` taken from `AKIVIS_MAX_DEGREE` when
    /// set to a positive integer.
    pub fn from_env() -> Self {
        std::env::var(MAX_DEGREE_ENV)
            .ok()
            .and_then(|s| s.trim().parse::<usize>().ok())
            .filter(|d| *d > 0)
            .map(TruncationPolicy::with_max_degree)
            .unwrap_or_default()
    }
}

/// The algebra `Ṽ(M)` for a fixed Akivis spec.
#[derive(Clone, Copy, Debug)]
pub struct Envelope<'a> {
    spec: &'a AkivisSpec,
    policy: TruncationPolicy,
}

fn sign(p: Parity) -> Scalar {
    p.sign()
}

impl<'a> Envelope<'a> {
    pub fn new(spec: &'a AkivisSpec) -> Self {
        Self::with_policy(spec, TruncationPolicy::default())
    }

    pub fn with_policy(spec: &'a AkivisSpec, policy: TruncationPolicy) -> Self {
        Envelope { spec, policy }
    }

    pub fn spec(&self) -> &'a AkivisSpec {
        self.spec
    }

    pub fn policy(&self) -> TruncationPolicy {
        self.policy
    }

    fn letter(&self, i: usize) -> Letter {
        Letter::of(self.spec.basis(), i)
    }

    fn parity(&self, i: usize) -> Parity {
        self.spec.parity(i)
    }

    /// The generator `e_i` as a degree-one element.
    pub fn gen(&self, i: usize) -> EnvElement {
        EnvElement::monomial(Monomial::generator(self.letter(i)))
    }

    /// Embeds `v ∈ M` in degree one.
    pub fn lift(&self, v: &Vector) -> EnvElement {
        EnvElement::lift(self.spec.basis(), v)
    }

    fn word(&self, indices: &[usize]) -> EnvElement {
        let letters = indices.iter().map(|&i| self.letter(i)).collect();
        EnvElement::monomial(Monomial::word(letters).expect("case formula yields an ordered word"))
    }

    fn check_degree(&self, degree: usize) -> Result<()> {
        if degree > self.policy.max_degree {
            Err(AlgebraError::Truncation {
                degree,
                max: self.policy.max_degree,
            })
        } else {
            Ok(())
        }
    }

    /// Bilinear extension of `*`.
    pub fn star(&self, u: &EnvElement, v: &EnvElement) -> Result<EnvElement> {
        let mut out = EnvElement::zero();
        for (m1, c1) in u.iter() {
            for (m2, c2) in v.iter() {
                let prod = self.star_monomials(m1, m2)?;
                out.add_scaled(&(c1 * c2), &prod);
                if out.len() > self.policy.max_monomials {
                    return Err(AlgebraError::MonomialLimit {
                        count: out.len() as u128,
                        limit: self.policy.max_monomials,
                    });
                }
            }
        }
        Ok(out)
    }

    /// `*` on basis monomials.
    pub fn star_monomials(&self, u: &Monomial, v: &Monomial) -> Result<EnvElement> {
        let (du, dv) = (u.degree(), v.degree());
        self.check_degree(du + dv)?;
        if du == 0 {
            return Ok(EnvElement::monomial(v.clone()));
        }
        if dv == 0 {
            return Ok(EnvElement::monomial(u.clone()));
        }
        if du + dv > 3 {
            return Ok(EnvElement::monomial(Monomial::pair(u.clone(), v.clone())?));
        }
        let idx = |m: &Monomial| -> Vec<usize> { m.letters().iter().map(|l| l.index).collect() };
        let (a, b) = (idx(u), idx(v));
        Ok(match (a.as_slice(), b.as_slice()) {
            ([r], [s]) => self.star_gens(*r, *s),
            ([r, s], [k]) => self.star_word_gen(*r, *s, *k),
            ([r], [s, k]) => self.star_gen_word(*r, *s, *k),
            _ => unreachable!("degrees of both factors are positive and sum to at most 3"),
        })
    }

    /// `e_r * e_s`.
    fn star_gens(&self, r: usize, s: usize) -> EnvElement {
        if r < s || (r == s && self.parity(r) == Parity::Even) {
            self.word(&[r, s])
        } else if r == s {
            self.lift(self.spec.bracket(r, r))
                .scaled(&Scalar::new(1, 2))
        } else {
            let mut out = self
                .word(&[s, r])
                .scaled(&sign(self.parity(r) * self.parity(s)));
            out.add_scaled(&Scalar::one(), &self.lift(self.spec.bracket(r, s)));
            out
        }
    }

    /// `e_r * v` for `v ∈ M`; only ever calls [`Self::star_gens`].
    fn star_gen_vec(&self, r: usize, v: &Vector) -> EnvElement {
        let mut out = EnvElement::zero();
        for (t, c) in v.iter() {
            out.add_scaled(c, &self.star_gens(r, t));
        }
        out
    }

    /// `v * e_k` for `v ∈ M`; only ever calls [`Self::star_gens`].
    fn star_vec_gen(&self, v: &Vector, k: usize) -> EnvElement {
        let mut out = EnvElement::zero();
        for (t, c) in v.iter() {
            out.add_scaled(c, &self.star_gens(t, k));
        }
        out
    }

    fn ternary(&self, i: usize, j: usize, k: usize) -> EnvElement {
        self.lift(self.spec.ternary(i, j, k))
    }

    /// `(e_r e_s) * e_k` for a basis word `e_r e_s`.
    fn star_word_gen(&self, r: usize, s: usize, k: usize) -> EnvElement {
        let (pr, ps, pk) = (self.parity(r), self.parity(s), self.parity(k));
        let br = |i, j| self.spec.bracket(i, j);
        let half = Scalar::new(1, 2);
        let one = Scalar::one();
        let mut out = EnvElement::zero();
        if r <= s && s <= k && !(k == s && ps.is_odd()) {
            out = self.word(&[r, s, k]);
        } else if r < s && s == k && ps.is_odd() {
            out.add_scaled(&one, &self.ternary(r, s, s));
            out.add_scaled(&half, &self.star_gen_vec(r, br(s, s)));
        } else if r <= k && k < s && !(r == k && pr.is_odd()) {
            out.add_scaled(&sign(pk * ps), &self.word(&[r, k, s]));
            out.add_scaled(&one, &self.star_gen_vec(r, br(s, k)));
            out.add_scaled(&one, &self.ternary(r, s, k));
            out.add_scaled(&-sign(ps * pk), &self.ternary(r, k, s));
        } else if r == k && k < s && pr.is_odd() {
            out.add_scaled(&-&half, &self.star_vec_gen(br(r, r), s));
            out.add_scaled(&one, &self.star_gen_vec(r, br(s, r)));
            out.add_scaled(&one, &self.ternary(r, s, r));
            out.add_scaled(&one, &self.ternary(r, r, s));
        } else if k < r {
            out.add_scaled(&sign(pk * (pr + ps)), &self.word(&[k, r, s]));
            out.add_scaled(&sign(pk * ps), &self.star_vec_gen(br(r, k), s));
            out.add_scaled(&one, &self.star_gen_vec(r, br(s, k)));
            out.add_scaled(&-sign(ps * pk), &self.ternary(r, k, s));
            out.add_scaled(&one, &self.ternary(r, s, k));
        } else {
            unreachable!("(e{r} e{s}) * e{k}: case split is exhaustive for PBW words");
        }
        out
    }

    /// `e_r * (e_s e_k)` for a basis word `e_s e_k`.
    fn star_gen_word(&self, r: usize, s: usize, k: usize) -> EnvElement {
        let (pr, ps, pk) = (self.parity(r), self.parity(s), self.parity(k));
        let br = |i, j| self.spec.bracket(i, j);
        let half = Scalar::new(1, 2);
        let one = Scalar::one();
        let mut out = EnvElement::zero();
        if r <= s && s <= k && !(r == s && ps.is_odd()) {
            out = self.word(&[r, s, k]);
            out.add_scaled(&-&one, &self.ternary(r, s, k));
        } else if r == s && s < k && pr.is_odd() {
            out.add_scaled(&half, &self.star_vec_gen(br(r, r), k));
            out.add_scaled(&-&one, &self.ternary(r, r, k));
        } else if s < r && r <= k && !(r == k && pr.is_odd()) {
            out.add_scaled(&sign(pr * ps), &self.word(&[s, r, k]));
            out.add_scaled(&-&one, &self.ternary(r, s, k));
            out.add_scaled(&one, &self.star_vec_gen(br(r, s), k));
        } else if s < r && r == k && pr.is_odd() {
            out.add_scaled(&(&half * &sign(pr * ps)), &self.star_gen_vec(s, br(r, r)));
            out.add_scaled(&one, &self.star_vec_gen(br(r, s), r));
            out.add_scaled(&-&one, &self.ternary(r, s, r));
            out.add_scaled(&sign(pr * ps), &self.ternary(s, r, r));
        } else if k < r {
            out.add_scaled(&sign(pr * (pk + ps)), &self.word(&[s, k, r]));
            out.add_scaled(&sign(pr * ps), &self.star_gen_vec(s, br(r, k)));
            out.add_scaled(&one, &self.star_vec_gen(br(r, s), k));
            out.add_scaled(&sign(pr * ps), &self.ternary(s, r, k));
            out.add_scaled(&-&one, &self.ternary(r, s, k));
            out.add_scaled(&-sign((ps + pk) * pr), &self.ternary(s, k, r));
        } else {
            unreachable!("e{r} * (e{s} e{k}): case split is exhaustive for PBW words");
        }
        out
    }

    /// `<u, v> = u * v - (-1)^{αβ} v * u` for homogeneous `u`, `v`.
    pub fn star_commutator(&self, u: &EnvElement, v: &EnvElement) -> Result<EnvElement> {
        let sign = match (u.parity(), v.parity()) {
            (Some(a), Some(b)) => sign(a * b),
            _ => Scalar::one(),
        };
        let mut out = self.star(u, v)?;
        out.add_scaled(&-sign, &self.star(v, u)?);
        Ok(out)
    }

    /// `<u, v, w> = (u * v) * w - u * (v * w)`.
    pub fn star_associator(
        &self,
        u: &EnvElement,
        v: &EnvElement,
        w: &EnvElement,
    ) -> Result<EnvElement> {
        let left = self.star(&self.star(u, v)?, w)?;
        let right = self.star(u, &self.star(v, w)?)?;
        Ok(left - right)
    }

    /// Image of a free nonassociative term: generators go to degree one,
    /// products go through `*`.
    pub fn eval(&self, term: &MagmaTerm) -> Result<EnvElement> {
        match term {
            MagmaTerm::Unit => Ok(EnvElement::unit()),
            MagmaTerm::Gen(i) => {
                self.spec.basis().check_index(*i)?;
                Ok(self.gen(*i))
            }
            MagmaTerm::Scaled(c, t) => Ok(self.eval(t)?.scaled(c)),
            MagmaTerm::Sum(ts) => {
                let mut out = EnvElement::zero();
                for t in ts {
                    out.add_scaled(&Scalar::one(), &self.eval(t)?);
                }
                Ok(out)
            }
            MagmaTerm::Product(l, r) => self.star(&self.eval(l)?, &self.eval(r)?),
        }
    }

    /// The supersymmetric product of two monomials of total degree at most
    /// three, or the formal pair above; this is the leading term of `u * v`.
    pub fn leading_product(&self, u: &Monomial, v: &Monomial) -> Result<EnvElement> {
        let (du, dv) = (u.degree(), v.degree());
        if du == 0 {
            return Ok(EnvElement::monomial(v.clone()));
        }
        if dv == 0 {
            return Ok(EnvElement::monomial(u.clone()));
        }
        if du + dv > 3 {
            return Ok(EnvElement::monomial(Monomial::pair(u.clone(), v.clone())?));
        }
        let mut word = u.letters();
        word.extend(v.letters());
        Ok(match sym_normalize(&word)? {
            Some((c, m)) => EnvElement::monomial(m).scaled(&c),
            None => EnvElement::zero(),
        })
    }

    /// `u * v` minus its leading term; lies in filtration degree below
    /// `deg u + deg v`.
    pub fn star_remainder(&self, u: &Monomial, v: &Monomial) -> Result<EnvElement> {
        Ok(self.star_monomials(u, v)? - self.leading_product(u, v)?)
    }

    /// Embeds `v` in degree one and projects back.
    pub fn iota_roundtrip(&self, v: &Vector) -> Result<Vector> {
        self.spec.basis().check(v)?;
        let lifted = self.lift(v);
        debug_assert!(lifted.max_degree().is_none_or(|d| d == 1));
        Ok(lifted.degree_one_part())
    }
}

/// Multiset count `C(p + j - 1, j)` with the convention `C(-1, 0) = 1`.
fn multichoose(p: u128, j: u128) -> Option<u128> {
    if j == 0 {
        return Some(1);
    }
    if p == 0 {
        return Some(0);
    }
    binomial(p + j - 1, j)
}

fn binomial(n: u128, k: u128) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.checked_mul(n - i)? / (i + 1);
    }
    Some(acc)
}

/// Dimensions of `V^0(M), ..., V^n(M)` for `p` even and `q` odd
/// generators, by the closed recursion: supersymmetric powers up to degree
/// three, `dim V^n = Σ_{i=1}^{n-1} dim V^i · dim V^{n-i}` above. `None` on
/// `u128` overflow.
pub fn graded_dims(p: usize, q: usize, n: usize) -> Option<Vec<u128>> {
    let (p, q) = (p as u128, q as u128);
    let mut dims: Vec<u128> = Vec::with_capacity(n + 1);
    for deg in 0..=n {
        let d = if deg <= 3 {
            let deg = deg as u128;
            let mut total: u128 = 0;
            for k in 0..=deg.min(q) {
                let term = multichoose(p, deg - k)?.checked_mul(binomial(q, k)?)?;
                total = total.checked_add(term)?;
            }
            total
        } else {
            let mut total: u128 = 0;
            for i in 1..deg {
                total = total.checked_add(dims[i].checked_mul(dims[deg - i])?)?;
            }
            total
        };
        dims.push(d);
    }
    Some(dims)
}

impl Envelope<'_> {
    /// `dim V^n(M)` without materializing monomials.
    pub fn graded_dim(&self, n: usize) -> Result<u128> {
        self.check_degree(n)?;
        let basis = self.spec.basis();
        graded_dims(basis.even_dim(), basis.odd_dim(), n)
            .map(|d| d[n])
            .ok_or_else(|| AlgebraError::InvalidInput(format!("dimension of degree {n} overflows")))
    }

    /// The PBW basis of `V^n(M)` in monomial order.
    pub fn pbw_basis(&self, n: usize) -> Result<Vec<Monomial>> {
        let count = self.graded_dim(n)?;
        if count > self.policy.max_monomials as u128 {
            return Err(AlgebraError::MonomialLimit {
                count,
                limit: self.policy.max_monomials,
            });
        }
        let mut levels: Vec<Vec<Monomial>> = vec![vec![Monomial::Unit]];
        for deg in 1..=n {
            let level = if deg <= 3 {
                self.ordered_words(deg)
            } else {
                let mut out = Vec::new();
                for i in 1..deg {
                    for l in &levels[i] {
                        for r in &levels[deg - i] {
                            out.push(Monomial::pair(l.clone(), r.clone())?);
                        }
                    }
                }
                out
            };
            levels.push(level);
        }
        let mut basis = levels.swap_remove(n);
        basis.sort();
        Ok(basis)
    }

    fn ordered_words(&self, len: usize) -> Vec<Monomial> {
        let dim = self.spec.dim();
        let mut out = Vec::new();
        let mut stack: Vec<Vec<usize>> = (0..dim).map(|i| vec![i]).collect();
        while let Some(w) = stack.pop() {
            if w.len() == len {
                out.push(
                    Monomial::word(w.iter().map(|&i| self.letter(i)).collect())
                        .expect("generated in PBW order"),
                );
                continue;
            }
            let last = *w.last().unwrap();
            let start = if self.parity(last).is_odd() {
                last + 1
            } else {
                last
            };
            for next in start..dim {
                let mut ext = w.clone();
                ext.push(next);
                stack.push(ext);
            }
        }
        out
    }
}
