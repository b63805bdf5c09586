//! Superpotentials: signed cyclic words and their cyclic derivatives.
//!
//! Rotating a cycle `w = uv` to `vu` multiplies it by `(-1)^{|u||v|}`.
//! The cyclic derivative of a term `p = u a v` along `a` is
//! `(-1)^{|u|(|a|+|v|)} vu`, which is the same sign that rotates `a` to the
//! front of `p`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::gqa::{sign, AlgElement, ArrowId, Coeff, GradedQuiver, Path};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PotentialError {
    #[error("term `{0}` is not a cycle")]
    NotACycle(String),
    #[error("term is a lazy path; potentials consist of arrow words")]
    LazyPath,
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("ambient dimension n = {0} is below 3")]
    SmallDimension(i64),
}

/// A cycle stored in its canonical rotation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CyclicWord {
    representative: Path,
}

impl CyclicWord {
    pub fn representative(&self) -> &Path {
        &self.representative
    }
}

/// Rotation of the written word `p` by `k` letters: `u = p[..k]` moves to
/// the back. Returns the rotated path and the Koszul sign `(-1)^{|u||v|}`.
pub fn rotate(q: &GradedQuiver, p: &Path, k: usize) -> (Path, Coeff) {
    let word = p.arrows();
    let (u, v) = word.split_at(k);
    let mut rotated: Vec<ArrowId> = v.to_vec();
    rotated.extend_from_slice(u);
    let s = sign(q.word_degree(u) * q.word_degree(v));
    let path = q.path(&rotated).expect("rotation of a cycle is a cycle");
    (path, s)
}

/// Canonical rotation of a cycle together with the sign `s` such that
/// `p ≡ s · representative`.
///
/// The canonical rotation is the lexicographically least word among all
/// rotations; for periodic words the first such rotation is used.
pub fn cyclic_normal_form(q: &GradedQuiver, p: &Path) -> Result<(CyclicWord, Coeff), PotentialError> {
    check_cycle(q, p)?;
    let n = p.len();
    let mut best: Option<(Path, Coeff)> = None;
    for k in 0..n {
        let (r, s) = rotate(q, p, k);
        let better = match &best {
            None => true,
            Some((b, _)) => r.arrows() < b.arrows(),
        };
        if better {
            best = Some((r, s));
        }
    }
    let (representative, s) = best.expect("nonempty cycle");
    Ok((CyclicWord { representative }, s))
}

/// Whether a cycle equals minus itself in the cyclic quotient: some rotation
/// reproduces the same word with sign `-1` (e.g. `ωω` with `|ω|` odd).
pub fn is_self_annihilating(q: &GradedQuiver, p: &Path) -> bool {
    (1..p.len()).any(|k| {
        let (r, s) = rotate(q, p, k);
        r == *p && s != Coeff::one()
    })
}

fn check_cycle(q: &GradedQuiver, p: &Path) -> Result<(), PotentialError> {
    if p.is_trivial() {
        return Err(PotentialError::LazyPath);
    }
    if !p.is_cycle() {
        return Err(PotentialError::NotACycle(q.display_path(p)));
    }
    Ok(())
}

/// A superpotential: rational combination of cyclic words, for the Ginzburg
/// construction in dimension `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Potential {
    n: i64,
    terms: BTreeMap<CyclicWord, Coeff>,
}

impl Potential {
    pub fn zero(n: i64) -> Result<Self, PotentialError> {
        if n < 3 {
            return Err(PotentialError::SmallDimension(n));
        }
        Ok(Potential {
            n,
            terms: BTreeMap::new(),
        })
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    /// The degree every term must have: `3 - n`.
    pub fn required_degree(&self) -> i64 {
        3 - self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&CyclicWord, &Coeff)> + '_ {
        self.terms.iter()
    }

    /// Adds `c · p`, folding `p` into its canonical rotation. Cycles that
    /// vanish in the cyclic quotient contribute nothing.
    pub fn add_term(&mut self, q: &GradedQuiver, c: Coeff, p: &Path) -> Result<(), PotentialError> {
        let (word, s) = cyclic_normal_form(q, p)?;
        if is_self_annihilating(q, word.representative()) {
            return Ok(());
        }
        let entry = self.terms.entry(word).or_insert_with(Coeff::zero);
        *entry += s * c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
        Ok(())
    }

    pub fn from_terms<'a, I>(q: &GradedQuiver, n: i64, terms: I) -> Result<Self, PotentialError>
    where
        I: IntoIterator<Item = (Coeff, &'a Path)>,
    {
        let mut w = Potential::zero(n)?;
        for (c, p) in terms {
            w.add_term(q, c, p)?;
        }
        Ok(w)
    }

    /// Checks the degree condition and the arrow-degree bounds of the
    /// finiteness theorem.
    pub fn validate(&self, q: &GradedQuiver) -> PotentialReport {
        let required = self.required_degree();
        let offending: Vec<(String, i64)> = self
            .terms
            .keys()
            .map(|w| (q.display_path(w.representative()), q.degree(w.representative())))
            .filter(|(_, d)| *d != required)
            .collect();
        let m = self.n - 2;
        let arrows_outside: Vec<(String, i64)> = q
            .arrows()
            .filter(|(_, a)| a.degree > 0 || a.degree < -m)
            .map(|(_, a)| (a.name.clone(), a.degree))
            .collect();
        PotentialReport {
            n: self.n,
            required_degree: required,
            offending_terms: offending,
            arrows_outside_bounds: arrows_outside,
        }
    }

    /// `∂_a W`.
    pub fn cyclic_derivative(&self, q: &GradedQuiver, a: ArrowId) -> Result<AlgElement, PotentialError> {
        if a.index() >= q.arrow_count() {
            return Err(PotentialError::UnknownArrow(format!("#{}", a.0)));
        }
        let mut out = AlgElement::zero();
        for (word, c) in &self.terms {
            out.add_scaled(c, &derivative_of_cycle(q, word.representative(), a));
        }
        Ok(out)
    }

    pub fn cyclic_derivative_by_name(&self, q: &GradedQuiver, name: &str) -> Result<AlgElement, PotentialError> {
        let a = q
            .arrow_id(name)
            .ok_or_else(|| PotentialError::UnknownArrow(name.to_string()))?;
        self.cyclic_derivative(q, a)
    }
}

/// `∂_a p` for a single cycle `p`, summed over all occurrences of `a`.
pub fn derivative_of_cycle(q: &GradedQuiver, p: &Path, a: ArrowId) -> AlgElement {
    let word = p.arrows();
    let deg_a = q.arrow(a).degree;
    let mut out = AlgElement::zero();
    for (i, letter) in word.iter().enumerate() {
        if *letter != a {
            continue;
        }
        let u = &word[..i];
        let v = &word[i + 1..];
        let s = sign(q.word_degree(u) * (deg_a + q.word_degree(v)));
        let mut vu: Vec<ArrowId> = v.to_vec();
        vu.extend_from_slice(u);
        let path = if vu.is_empty() {
            q.idempotent(q.arrow(a).target)
        } else {
            q.path(&vu).expect("vu is a path from target(a) to source(a)")
        };
        out.add_term(s, path);
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PotentialReport {
    pub n: i64,
    pub required_degree: i64,
    /// Terms (rendered) whose degree differs from `3 - n`, with that degree.
    pub offending_terms: Vec<(String, i64)>,
    /// Arrows whose degree lies outside `[-(n-2), 0]`.
    pub arrows_outside_bounds: Vec<(String, i64)>,
}

impl PotentialReport {
    pub fn is_valid(&self) -> bool {
        self.offending_terms.is_empty()
    }

    pub fn arrow_degrees_in_range(&self) -> bool {
        self.arrows_outside_bounds.is_empty()
    }
}
