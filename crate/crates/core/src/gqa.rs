//! Graded quivers and exact arithmetic in their path algebras.
//!
//! Paths are written in function-composition order: the rightmost arrow acts
//! first, so the word `bc` means "apply `c`, then `b`". Two adjacent letters
//! `p q` of a path satisfy `source(p) == target(q)`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Exact coefficients used throughout the crate.
pub type Coeff = BigRational;

/// Suffix appended to an arrow name to form its dual.
pub const DUAL_SUFFIX: &str = "^*";
/// Prefix of the vertex loops `t_x` of the extended quiver.
pub const LOOP_PREFIX: &str = "t_";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexId(pub u32);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ArrowId(pub u32);

impl VertexId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl ArrowId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QuiverError {
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("duplicate arrow name `{0}`")]
    DuplicateArrow(String),
    #[error("arrow name `{0}` coincides with a vertex name")]
    ArrowNamedLikeVertex(String),
    #[error("arrow `{arrow}` refers to undeclared vertex `{vertex}`")]
    UnknownVertex { arrow: String, vertex: String },
    #[error("name `{0}` is reserved for generated duals or vertex loops")]
    ReservedName(String),
    #[error("empty identifier")]
    EmptyName,
}

/// Declaration of one arrow: `name : source -> target` in the given degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArrowSpec {
    pub name: String,
    pub source: String,
    pub target: String,
    pub degree: i64,
}

impl ArrowSpec {
    pub fn new(name: &str, source: &str, target: &str, degree: i64) -> Self {
        ArrowSpec {
            name: name.to_string(),
            source: source.to_string(),
            target: target.to_string(),
            degree,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: VertexId,
    pub target: VertexId,
    pub degree: i64,
}

/// A finite quiver whose arrows carry integer degrees.
///
/// Vertex and arrow ids are declaration indices, which also fix the
/// order used for deterministic bases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedQuiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    vertex_index: HashMap<String, VertexId>,
    arrow_index: HashMap<String, ArrowId>,
}

impl GradedQuiver {
    /// Builds and validates a user-supplied quiver.
    ///
    /// Names containing `^*`, and names of the form `t_<declared vertex>`,
    /// are reserved for [`crate::ginzburg::extend_quiver`].
    pub fn new<V, I>(vertices: V, arrows: I) -> Result<Self, QuiverError>
    where
        V: IntoIterator,
        V::Item: Into<String>,
        I: IntoIterator<Item = ArrowSpec>,
    {
        let vertices: Vec<String> = vertices.into_iter().map(Into::into).collect();
        let arrows: Vec<ArrowSpec> = arrows.into_iter().collect();
        for name in vertices.iter().chain(arrows.iter().map(|a| &a.name)) {
            if name.is_empty() {
                return Err(QuiverError::EmptyName);
            }
            if name.contains(DUAL_SUFFIX) {
                return Err(QuiverError::ReservedName(name.clone()));
            }
        }
        for a in &arrows {
            if let Some(rest) = a.name.strip_prefix(LOOP_PREFIX) {
                if vertices.iter().any(|v| v == rest) {
                    return Err(QuiverError::ReservedName(a.name.clone()));
                }
            }
        }
        Self::build(vertices, arrows)
    }

    /// Construction without the reserved-name check; used for generated quivers.
    pub(crate) fn build(vertices: Vec<String>, specs: Vec<ArrowSpec>) -> Result<Self, QuiverError> {
        let mut vertex_index = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if vertex_index.insert(v.clone(), VertexId(i as u32)).is_some() {
                return Err(QuiverError::DuplicateVertex(v.clone()));
            }
        }
        let mut arrow_index = HashMap::new();
        let mut arrows = Vec::with_capacity(specs.len());
        for (i, spec) in specs.into_iter().enumerate() {
            if vertex_index.contains_key(&spec.name) {
                return Err(QuiverError::ArrowNamedLikeVertex(spec.name));
            }
            if arrow_index.insert(spec.name.clone(), ArrowId(i as u32)).is_some() {
                return Err(QuiverError::DuplicateArrow(spec.name));
            }
            let lookup = |v: &str| {
                vertex_index.get(v).copied().ok_or_else(|| QuiverError::UnknownVertex {
                    arrow: spec.name.clone(),
                    vertex: v.to_string(),
                })
            };
            let source = lookup(&spec.source)?;
            let target = lookup(&spec.target)?;
            arrows.push(Arrow {
                name: spec.name,
                source,
                target,
                degree: spec.degree,
            });
        }
        Ok(GradedQuiver {
            vertices,
            arrows,
            vertex_index,
            arrow_index,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.vertices[v.index()]
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_ids(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.vertices.len() as u32).map(VertexId)
    }

    pub fn vertex(&self, name: &str) -> Option<VertexId> {
        self.vertex_index.get(name).copied()
    }

    pub fn arrow_id(&self, name: &str) -> Option<ArrowId> {
        self.arrow_index.get(name).copied()
    }

    pub fn arrow(&self, id: ArrowId) -> &Arrow {
        &self.arrows[id.index()]
    }

    pub fn arrows(&self) -> impl Iterator<Item = (ArrowId, &Arrow)> + '_ {
        self.arrows
            .iter()
            .enumerate()
            .map(|(i, a)| (ArrowId(i as u32), a))
    }

    /// Arrow specs in declaration order, using vertex names.
    pub fn arrow_specs(&self) -> Vec<ArrowSpec> {
        self.arrows
            .iter()
            .map(|a| ArrowSpec {
                name: a.name.clone(),
                source: self.vertex_name(a.source).to_string(),
                target: self.vertex_name(a.target).to_string(),
                degree: a.degree,
            })
            .collect()
    }

    pub fn idempotent(&self, v: VertexId) -> Path {
        Path::trivial(v)
    }

    pub fn arrow_path(&self, id: ArrowId) -> Path {
        let a = self.arrow(id);
        Path {
            source: a.source,
            target: a.target,
            arrows: vec![id],
        }
    }

    /// Builds a path from a written word (leftmost letter acts last).
    pub fn path(&self, word: &[ArrowId]) -> Option<Path> {
        let (first, last) = match (word.first(), word.last()) {
            (Some(f), Some(l)) => (*f, *l),
            _ => return None,
        };
        for pair in word.windows(2) {
            if self.arrow(pair[0]).source != self.arrow(pair[1]).target {
                return None;
            }
        }
        Some(Path {
            source: self.arrow(last).source,
            target: self.arrow(first).target,
            arrows: word.to_vec(),
        })
    }

    /// Builds a path from arrow names in written order.
    pub fn path_by_names(&self, names: &[&str]) -> Option<Path> {
        let ids: Option<Vec<ArrowId>> = names.iter().map(|n| self.arrow_id(n)).collect();
        self.path(&ids?)
    }

    pub fn degree(&self, p: &Path) -> i64 {
        p.arrows.iter().map(|a| self.arrow(*a).degree).sum()
    }

    /// Degrees of the arrows of a word, summed over a range of positions.
    pub fn word_degree(&self, word: &[ArrowId]) -> i64 {
        word.iter().map(|a| self.arrow(*a).degree).sum()
    }

    /// The vertices visited by `p`, from its target (position 0) to its source.
    pub fn path_vertices(&self, p: &Path) -> Vec<VertexId> {
        if p.arrows.is_empty() {
            return vec![p.source];
        }
        let mut out = Vec::with_capacity(p.arrows.len() + 1);
        out.push(p.target);
        for a in &p.arrows {
            out.push(self.arrow(*a).source);
        }
        out
    }

    /// The subpath occupying written positions `start..end`; for an empty
    /// range, the idempotent at the corresponding vertex.
    pub fn subpath(&self, p: &Path, start: usize, end: usize) -> Path {
        debug_assert!(start <= end && end <= p.arrows.len());
        if start == end {
            return Path::trivial(self.path_vertices(p)[start]);
        }
        let word = &p.arrows[start..end];
        Path {
            source: self.arrow(word[word.len() - 1]).source,
            target: self.arrow(word[0]).target,
            arrows: word.to_vec(),
        }
    }

    /// True when every arrow name (ignoring a dual suffix and vertex loops)
    /// is a single character, so paths print unambiguously by juxtaposition.
    fn compact_names(&self) -> bool {
        self.arrows.iter().all(|a| {
            let base = a.name.strip_suffix(DUAL_SUFFIX).unwrap_or(&a.name);
            base.chars().count() == 1 || a.name.starts_with(LOOP_PREFIX)
        })
    }

    pub fn display_arrow(&self, id: ArrowId) -> String {
        let name = &self.arrow(id).name;
        match name.strip_suffix(DUAL_SUFFIX) {
            Some(base) if self.compact_names() => format!("{base}*"),
            _ => name.clone(),
        }
    }

    /// Renders a path: `e<vertex>` for idempotents, juxtaposed arrow names
    /// when unambiguous, space separated otherwise.
    pub fn display_path(&self, p: &Path) -> String {
        if p.arrows.is_empty() {
            return format!("e{}", self.vertex_name(p.source));
        }
        let sep = if self.compact_names() { "" } else { " " };
        p.arrows
            .iter()
            .map(|a| self.display_arrow(*a))
            .collect::<Vec<_>>()
            .join(sep)
    }

    pub fn display_element(&self, x: &AlgElement) -> String {
        if x.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (p, c)) in x.iter().enumerate() {
            let negative = c.is_negative();
            if i == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let mag = c.abs();
            if !mag.is_one() {
                out.push_str(&format_rational(&mag));
                out.push(' ');
            }
            out.push_str(&self.display_path(p));
        }
        out
    }

    /// All paths of length at most `max_length`, optionally of a fixed total
    /// degree, in degree-lexicographic order.
    pub fn enumerate_paths(&self, max_length: usize, degree_filter: Option<i64>) -> Vec<Path> {
        let mut all = Vec::new();
        let mut layer: Vec<Path> = self.vertex_ids().map(Path::trivial).collect();
        for len in 0..=max_length {
            all.extend(layer.iter().cloned());
            if len == max_length {
                break;
            }
            let mut next = Vec::new();
            for p in &layer {
                for (id, a) in self.arrows() {
                    if a.target == p.source {
                        next.push(p.then_arrow(id, a.source));
                    }
                }
            }
            layer = next;
        }
        if let Some(d) = degree_filter {
            all.retain(|p| self.degree(p) == d);
        }
        all.sort();
        all
    }
}

/// Prints a rational as `p` or `p/q`.
pub fn format_rational(r: &Coeff) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// A path in a graded quiver, possibly of length zero.
///
/// Ordering is degree-lexicographic: shorter first, then lexicographic on
/// arrow declaration indices, then by vertex for idempotents.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Path {
    source: VertexId,
    target: VertexId,
    arrows: Vec<ArrowId>,
}

impl Path {
    pub fn trivial(v: VertexId) -> Self {
        Path {
            source: v,
            target: v,
            arrows: Vec::new(),
        }
    }

    pub fn source(&self) -> VertexId {
        self.source
    }

    pub fn target(&self) -> VertexId {
        self.target
    }

    pub fn arrows(&self) -> &[ArrowId] {
        &self.arrows
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn is_cycle(&self) -> bool {
        self.source == self.target
    }

    pub fn is_parallel(&self, other: &Path) -> bool {
        self.source == other.source && self.target == other.target
    }

    /// `self ∘ other`: defined when `other` ends where `self` starts.
    pub fn compose(&self, other: &Path) -> Option<Path> {
        if self.source != other.target {
            return None;
        }
        let mut arrows = Vec::with_capacity(self.arrows.len() + other.arrows.len());
        arrows.extend_from_slice(&self.arrows);
        arrows.extend_from_slice(&other.arrows);
        Some(Path {
            source: other.source,
            target: self.target,
            arrows,
        })
    }

    /// Precomposes with an arrow whose source is `new_source`.
    pub(crate) fn then_arrow(&self, id: ArrowId, new_source: VertexId) -> Path {
        let mut arrows = self.arrows.clone();
        arrows.push(id);
        Path {
            source: new_source,
            target: self.target,
            arrows,
        }
    }

    /// Whether `word` occurs as a contiguous block of letters.
    pub fn contains_word(&self, word: &[ArrowId]) -> Option<usize> {
        if word.is_empty() || word.len() > self.arrows.len() {
            return None;
        }
        self.arrows.windows(word.len()).position(|w| w == word)
    }
}

impl Ord for Path {
    fn cmp(&self, other: &Self) -> Ordering {
        self.arrows
            .len()
            .cmp(&other.arrows.len())
            .then_with(|| self.arrows.cmp(&other.arrows))
            .then_with(|| self.source.cmp(&other.source))
            .then_with(|| self.target.cmp(&other.target))
    }
}

impl PartialOrd for Path {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A finite rational linear combination of paths. Zero coefficients are
/// never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default, Hash)]
pub struct AlgElement {
    terms: BTreeMap<Path, Coeff>,
}

impl AlgElement {
    pub fn zero() -> Self {
        AlgElement::default()
    }

    pub fn from_path(p: Path) -> Self {
        Self::term(Coeff::one(), p)
    }

    pub fn term(c: Coeff, p: Path) -> Self {
        let mut x = AlgElement::zero();
        x.add_term(c, p);
        x
    }

    /// Sum of all idempotents: the unit of the path algebra.
    pub fn unit(q: &GradedQuiver) -> Self {
        let mut x = AlgElement::zero();
        for v in q.vertex_ids() {
            x.add_term(Coeff::one(), Path::trivial(v));
        }
        x
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&Path, &Coeff)> + '_ {
        self.terms.iter()
    }

    pub fn paths(&self) -> impl Iterator<Item = &Path> + '_ {
        self.terms.keys()
    }

    pub fn coefficient(&self, p: &Path) -> Coeff {
        self.terms.get(p).cloned().unwrap_or_else(Coeff::zero)
    }

    /// The largest path in the monomial order, with its coefficient.
    pub fn leading(&self) -> Option<(&Path, &Coeff)> {
        self.terms.iter().next_back()
    }

    pub(crate) fn pop_leading(&mut self) -> Option<(Path, Coeff)> {
        self.terms.pop_last()
    }

    pub fn add_term(&mut self, c: Coeff, p: Path) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(p) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, r: &Coeff, other: &AlgElement) {
        if r.is_zero() {
            return;
        }
        for (p, c) in &other.terms {
            self.add_term(r * c, p.clone());
        }
    }

    pub fn scale(&self, r: &Coeff) -> AlgElement {
        let mut out = AlgElement::zero();
        out.add_scaled(r, self);
        out
    }

    /// Bilinear extension of path composition; non-composable pairs give 0.
    pub fn mul(&self, other: &AlgElement) -> AlgElement {
        let mut out = AlgElement::zero();
        for (p, c) in &self.terms {
            for (q, d) in &other.terms {
                if let Some(pq) = p.compose(q) {
                    out.add_term(c * d, pq);
                }
            }
        }
        out
    }

    /// The common degree of all terms, if there is one (`Some(0)` for zero).
    pub fn homogeneous_degree(&self, q: &GradedQuiver) -> Option<i64> {
        let mut degrees = self.terms.keys().map(|p| q.degree(p));
        let first = match degrees.next() {
            Some(d) => d,
            None => return Some(0),
        };
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn is_homogeneous(&self, q: &GradedQuiver) -> bool {
        self.homogeneous_degree(q).is_some()
    }

    /// `e_target · self · e_source`.
    pub fn restrict(&self, target: VertexId, source: VertexId) -> AlgElement {
        AlgElement {
            terms: self
                .terms
                .iter()
                .filter(|(p, _)| p.target == target && p.source == source)
                .map(|(p, c)| (p.clone(), c.clone()))
                .collect(),
        }
    }

    /// Monic rescaling by the inverse of the leading coefficient.
    pub fn monic(&self) -> AlgElement {
        match self.leading() {
            Some((_, c)) => self.scale(&c.recip()),
            None => AlgElement::zero(),
        }
    }
}

impl FromIterator<(Coeff, Path)> for AlgElement {
    fn from_iter<T: IntoIterator<Item = (Coeff, Path)>>(iter: T) -> Self {
        let mut x = AlgElement::zero();
        for (c, p) in iter {
            x.add_term(c, p);
        }
        x
    }
}

impl Add for &AlgElement {
    type Output = AlgElement;
    fn add(self, rhs: &AlgElement) -> AlgElement {
        let mut out = self.clone();
        out.add_scaled(&Coeff::one(), rhs);
        out
    }
}

impl Sub for &AlgElement {
    type Output = AlgElement;
    fn sub(self, rhs: &AlgElement) -> AlgElement {
        let mut out = self.clone();
        out.add_scaled(&-Coeff::one(), rhs);
        out
    }
}

impl Neg for &AlgElement {
    type Output = AlgElement;
    fn neg(self) -> AlgElement {
        self.scale(&-Coeff::one())
    }
}

impl Mul for &AlgElement {
    type Output = AlgElement;
    fn mul(self, rhs: &AlgElement) -> AlgElement {
        AlgElement::mul(self, rhs)
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.arrows.is_empty() {
            return write!(f, "e[{}]", self.source.0);
        }
        let ids: Vec<String> = self.arrows.iter().map(|a| a.0.to_string()).collect();
        write!(f, "[{}]", ids.join(" "))
    }
}

/// `(-1)^k` as a rational.
pub fn sign(k: i64) -> Coeff {
    if k.rem_euclid(2) == 0 {
        Coeff::one()
    } else {
        -Coeff::one()
    }
}

pub fn int(k: i64) -> Coeff {
    Coeff::from_integer(k.into())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example() -> GradedQuiver {
        GradedQuiver::new(
            ["1", "2", "3"],
            [
                ArrowSpec::new("a", "1", "2", -1),
                ArrowSpec::new("b", "3", "1", 0),
                ArrowSpec::new("c", "2", "3", 0),
            ],
        )
        .unwrap()
    }

    fn p(q: &GradedQuiver, w: &[&str]) -> Path {
        q.path_by_names(w).unwrap()
    }

    #[test]
    fn rejects_bad_quivers() {
        let dup = GradedQuiver::new(
            ["1", "2"],
            [ArrowSpec::new("a", "1", "2", 0), ArrowSpec::new("a", "2", "1", 0)],
        );
        assert_eq!(dup.unwrap_err(), QuiverError::DuplicateArrow("a".into()));
        let dangling = GradedQuiver::new(["1"], [ArrowSpec::new("a", "1", "9", 0)]);
        assert!(matches!(dangling, Err(QuiverError::UnknownVertex { .. })));
        let clash = GradedQuiver::new(["1", "a"], [ArrowSpec::new("a", "1", "1", 0)]);
        assert!(matches!(clash, Err(QuiverError::ArrowNamedLikeVertex(_))));
        let reserved = GradedQuiver::new(["1"], [ArrowSpec::new("t_1", "1", "1", 0)]);
        assert!(matches!(reserved, Err(QuiverError::ReservedName(_))));
        let starred = GradedQuiver::new(["1"], [ArrowSpec::new("x^*", "1", "1", 0)]);
        assert!(matches!(starred, Err(QuiverError::ReservedName(_))));
        // `t_9` is fine when there is no vertex `9`
        assert!(GradedQuiver::new(["1"], [ArrowSpec::new("t_9", "1", "1", 0)]).is_ok());
        let point = GradedQuiver::new(["1"], []).unwrap();
        assert_eq!(point.vertex_count(), 1);
        assert_eq!(point.arrow_count(), 0);
    }

    #[test]
    fn composition_follows_function_order() {
        let q = example();
        let b = p(&q, &["b"]);
        let c = p(&q, &["c"]);
        let bc = b.compose(&c).unwrap();
        assert_eq!(q.vertex_name(bc.source()), "2");
        assert_eq!(q.vertex_name(bc.target()), "1");
        assert_eq!(q.display_path(&bc), "bc");
        let e2 = q.idempotent(q.vertex("2").unwrap());
        assert_eq!(e2.compose(&c), None);
        assert_eq!(c.compose(&e2), Some(c.clone()));
        let e3 = q.idempotent(q.vertex("3").unwrap());
        assert_eq!(e3.compose(&c), Some(c.clone()));
        assert_eq!(c.compose(&b), None);
    }

    #[test]
    fn degrees() {
        let q = example();
        assert_eq!(q.degree(&p(&q, &["a", "b", "c"])), -1);
        assert_eq!(q.degree(&q.idempotent(VertexId(0))), 0);
    }

    #[test]
    fn algebra_products() {
        let q = example();
        let b = AlgElement::from_path(p(&q, &["b"]));
        let c = AlgElement::from_path(p(&q, &["c"]));
        assert_eq!(&b * &c, AlgElement::from_path(p(&q, &["b", "c"])));
        assert!((&c * &b).is_zero());
        let unit = AlgElement::unit(&q);
        assert_eq!(&unit * &b, b);
        assert_eq!(&b * &unit, b);
        let x = &b + &c;
        assert!((&x - &x).is_zero());
        assert_eq!(q.display_element(&(&b - &c.scale(&int(2)))), "b - 2 c");
    }

    #[test]
    fn enumeration() {
        let q = example();
        let deg0: Vec<String> = q
            .enumerate_paths(1, Some(0))
            .iter()
            .map(|x| q.display_path(x))
            .collect();
        assert_eq!(deg0, ["e1", "e2", "e3", "b", "c"]);
        assert_eq!(q.enumerate_paths(0, None).len(), 3);
        let a3 = GradedQuiver::new(
            ["1", "2", "3"],
            [ArrowSpec::new("x", "2", "1", 0), ArrowSpec::new("y", "3", "2", 0)],
        )
        .unwrap();
        assert_eq!(a3.enumerate_paths(2, None).len(), 6);
        assert_eq!(a3.enumerate_paths(5, None).len(), 6);
    }

    #[test]
    fn subpaths_and_vertices() {
        let q = example();
        let abc = p(&q, &["a", "b", "c"]);
        let names: Vec<&str> = q.path_vertices(&abc).iter().map(|v| q.vertex_name(*v)).collect();
        assert_eq!(names, ["2", "1", "3", "2"]);
        assert_eq!(q.subpath(&abc, 1, 3), p(&q, &["b", "c"]));
        assert_eq!(q.subpath(&abc, 1, 1), q.idempotent(q.vertex("1").unwrap()));
    }
}
