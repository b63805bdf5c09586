//! The Ginzburg dg category `Γ_n(Q, W)`.
//!
//! The extended quiver adds a dual `a^*: y -> x` of degree `2 - n - |a|` for
//! every arrow `a: x -> y`, and a loop `t_x` of degree `1 - n` at every vertex.
//! The differential vanishes on `Q`, sends `a^*` to `∂_a W`, and sends `t_x` to
//! `(-1)^n e_x (Σ_v [v, v^*]) e_x`.
//!
//! `d` is extended to paths by the rule
//! `d(x y) = (-1)^{|y|} d(x) y + x d(y)`: each factor is differentiated with
//! the sign of the degrees standing to its right. With the generator values
//! above this is the convention for which `d² = 0`.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::gqa::{sign, AlgElement, ArrowId, ArrowSpec, GradedQuiver, Path, QuiverError, VertexId};
use crate::gqa::{DUAL_SUFFIX, LOOP_PREFIX};
use crate::potential::{Potential, PotentialError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GinzburgError {
    #[error("n = {0} is outside the supported range n >= 3")]
    SmallDimension(i64),
    #[error("potential term `{term}` has degree {degree}, expected {expected}")]
    PotentialDegree { term: String, degree: i64, expected: i64 },
    #[error("reserved generator name collides: {0}")]
    NameCollision(QuiverError),
    #[error(transparent)]
    Potential(#[from] PotentialError),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
}

/// The role of a generator of the extended quiver.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    Arrow(ArrowId),
    Dual(ArrowId),
    Loop(VertexId),
}

pub fn dual_name(name: &str) -> String {
    format!("{name}{DUAL_SUFFIX}")
}

pub fn loop_name(vertex: &str) -> String {
    format!("{LOOP_PREFIX}{vertex}")
}

/// `Q̃` for `Γ_n`: arrows of `Q`, then their duals, then the vertex loops,
/// all in declaration order. Arrow ids of `Q` are preserved.
pub fn extend_quiver(q: &GradedQuiver, n: i64) -> Result<GradedQuiver, GinzburgError> {
    if n < 3 {
        return Err(GinzburgError::SmallDimension(n));
    }
    let mut specs = q.arrow_specs();
    for a in q.arrow_specs() {
        specs.push(ArrowSpec {
            name: dual_name(&a.name),
            source: a.target.clone(),
            target: a.source.clone(),
            degree: 2 - n - a.degree,
        });
    }
    for v in q.vertex_names() {
        specs.push(ArrowSpec {
            name: loop_name(v),
            source: v.clone(),
            target: v.clone(),
            degree: 1 - n,
        });
    }
    GradedQuiver::build(q.vertex_names().to_vec(), specs).map_err(GinzburgError::NameCollision)
}

/// A presentation of `Γ_n(Q, W)`: the extended quiver with the differential
/// materialized on every generator.
#[derive(Debug, Clone)]
pub struct DgPresentation {
    base: GradedQuiver,
    extended: GradedQuiver,
    n: i64,
    potential: Potential,
    d_on_generators: Vec<AlgElement>,
}

impl DgPresentation {
    pub fn new(q: &GradedQuiver, potential: Potential) -> Result<Self, GinzburgError> {
        let n = potential.n();
        let report = potential.validate(q);
        if let Some((term, degree)) = report.offending_terms.first() {
            return Err(GinzburgError::PotentialDegree {
                term: term.clone(),
                degree: *degree,
                expected: report.required_degree,
            });
        }
        let extended = extend_quiver(q, n)?;
        let arrows = q.arrow_count();
        let mut d_on_generators = Vec::with_capacity(extended.arrow_count());
        for _ in 0..arrows {
            d_on_generators.push(AlgElement::zero());
        }
        for i in 0..arrows {
            d_on_generators.push(potential.cyclic_derivative(q, ArrowId(i as u32))?);
        }
        for x in q.vertex_ids() {
            d_on_generators.push(loop_differential(q, &extended, n, x));
        }
        Ok(DgPresentation {
            base: q.clone(),
            extended,
            n,
            potential,
            d_on_generators,
        })
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn base_quiver(&self) -> &GradedQuiver {
        &self.base
    }

    pub fn extended_quiver(&self) -> &GradedQuiver {
        &self.extended
    }

    pub fn potential(&self) -> &Potential {
        &self.potential
    }

    pub fn generator(&self, id: ArrowId) -> Generator {
        let arrows = self.base.arrow_count();
        let i = id.index();
        if i < arrows {
            Generator::Arrow(id)
        } else if i < 2 * arrows {
            Generator::Dual(ArrowId((i - arrows) as u32))
        } else {
            Generator::Loop(VertexId((i - 2 * arrows) as u32))
        }
    }

    pub fn dual_of(&self, a: ArrowId) -> ArrowId {
        ArrowId((self.base.arrow_count() + a.index()) as u32)
    }

    pub fn loop_at(&self, x: VertexId) -> ArrowId {
        ArrowId((2 * self.base.arrow_count() + x.index()) as u32)
    }

    /// `d(g)` for a generator of the extended quiver.
    pub fn differential_on_generator(&self, g: ArrowId) -> &AlgElement {
        &self.d_on_generators[g.index()]
    }

    pub fn differential_by_name(&self, name: &str) -> Result<&AlgElement, GinzburgError> {
        let id = self
            .extended
            .arrow_id(name)
            .ok_or_else(|| GinzburgError::UnknownGenerator(name.to_string()))?;
        Ok(self.differential_on_generator(id))
    }

    /// Replaces the value of `d` on one generator. Only meant for building
    /// deliberately inconsistent presentations (negative controls).
    pub fn with_generator_value(mut self, name: &str, value: AlgElement) -> Result<Self, GinzburgError> {
        let id = self
            .extended
            .arrow_id(name)
            .ok_or_else(|| GinzburgError::UnknownGenerator(name.to_string()))?;
        self.d_on_generators[id.index()] = value;
        Ok(self)
    }

    /// `d` on a single path of the extended quiver.
    pub fn apply_d_path(&self, p: &Path) -> AlgElement {
        let q = &self.extended;
        let word = p.arrows();
        let mut out = AlgElement::zero();
        let mut right_degree: i64 = word.iter().map(|a| q.arrow(*a).degree).sum();
        for (i, g) in word.iter().enumerate() {
            right_degree -= q.arrow(*g).degree;
            let dg = self.differential_on_generator(*g);
            if dg.is_zero() {
                continue;
            }
            let left = AlgElement::from_path(q.subpath(p, 0, i));
            let right = AlgElement::from_path(q.subpath(p, i + 1, word.len()));
            let term = left.mul(dg).mul(&right);
            out.add_scaled(&sign(right_degree), &term);
        }
        out
    }

    pub fn apply_d(&self, x: &AlgElement) -> AlgElement {
        let mut out = AlgElement::zero();
        for (p, c) in x.iter() {
            out.add_scaled(c, &self.apply_d_path(p));
        }
        out
    }

    /// Evaluates `d(d(g))` on every generator and collects nonzero residues.
    pub fn check_d_squared(&self) -> DSquaredReport {
        let mut residues = Vec::new();
        for (id, arrow) in self.extended.arrows() {
            let r = self.apply_d(self.differential_on_generator(id));
            if !r.is_zero() {
                residues.push(Residue {
                    generator: arrow.name.clone(),
                    residue: self.extended.display_element(&r),
                    element: r,
                });
            }
        }
        DSquaredReport {
            generators_checked: self.extended.arrow_count(),
            residues,
        }
    }

    /// Checks that `d(g)` is parallel to `g` and homogeneous of degree `|g| + 1`.
    pub fn check_generators(&self) -> Vec<String> {
        let q = &self.extended;
        let mut problems = Vec::new();
        for (id, arrow) in q.arrows() {
            for p in self.differential_on_generator(id).paths() {
                if p.source() != arrow.source || p.target() != arrow.target {
                    problems.push(format!("d({}) contains non-parallel path {}", arrow.name, q.display_path(p)));
                }
                if q.degree(p) != arrow.degree + 1 {
                    problems.push(format!(
                        "d({}) contains {} of degree {}, expected {}",
                        arrow.name,
                        q.display_path(p),
                        q.degree(p),
                        arrow.degree + 1
                    ));
                }
            }
        }
        problems
    }

    /// Whether every generator of `Q̃` sits in nonpositive degree.
    pub fn generators_nonpositive(&self) -> bool {
        self.extended.arrows().all(|(_, a)| a.degree <= 0)
    }

    /// Generator values keyed by generator name, in declaration order.
    pub fn differential_table(&self) -> Vec<(String, String)> {
        self.extended
            .arrows()
            .map(|(id, _)| {
                (
                    self.extended.display_arrow(id),
                    self.extended.display_element(self.differential_on_generator(id)),
                )
            })
            .collect()
    }
}

/// `(-1)^n e_x (Σ_v v v^* - (-1)^{|v||v^*|} v^* v) e_x`.
fn loop_differential(q: &GradedQuiver, ext: &GradedQuiver, n: i64, x: VertexId) -> AlgElement {
    let arrows = q.arrow_count();
    let overall = sign(n);
    let mut out = AlgElement::zero();
    for (id, a) in q.arrows() {
        let dual = ArrowId((arrows + id.index()) as u32);
        let dual_degree = ext.arrow(dual).degree;
        // v v^* is a cycle at target(v); v^* v a cycle at source(v)
        if a.target == x {
            let p = ext.path(&[id, dual]).expect("v v^* composes");
            out.add_term(overall.clone(), p);
        }
        if a.source == x {
            let p = ext.path(&[dual, id]).expect("v^* v composes");
            out.add_term(-&overall * sign(a.degree * dual_degree), p);
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Residue {
    pub generator: String,
    pub residue: String,
    pub element: AlgElement,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DSquaredReport {
    pub generators_checked: usize,
    pub residues: Vec<Residue>,
}

impl DSquaredReport {
    pub fn passed(&self) -> bool {
        self.residues.is_empty()
    }
}

/// The left-acting derivation `D(x) = (-1)^{|x|} d(x)` on homogeneous `x`.
/// It satisfies `D(xy) = D(x) y + (-1)^{|x|} x D(y)` and `D² = 0` exactly when
/// `d² = 0`.
pub fn left_derivation(pres: &DgPresentation, x: &AlgElement) -> AlgElement {
    let q = pres.extended_quiver();
    let mut by_degree: BTreeMap<i64, AlgElement> = BTreeMap::new();
    for (p, c) in x.iter() {
        by_degree
            .entry(q.degree(p))
            .or_default()
            .add_term(c.clone(), p.clone());
    }
    let mut out = AlgElement::zero();
    for (deg, part) in by_degree {
        out.add_scaled(&sign(deg), &pres.apply_d(&part));
    }
    out
}
