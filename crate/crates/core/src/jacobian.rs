//! Zeroth homology of a Ginzburg dg category.
//!
//! Under the scope guard (all arrows of `Q` in degrees `[3 - n, 0]`) the
//! degree-0 part of `Γ_n(Q, W)` is the path algebra of the degree-0 subquiver,
//! and the image of `d` in degree 0 is the two-sided ideal generated by the
//! cyclic derivatives `∂_a W` with `|a| = 3 - n`. `H⁰` is computed as that
//! quotient through a noncommutative Gröbner basis for the degree-lexicographic
//! order, and its dimension is read off the set of irreducible paths.

use std::cell::Cell;
use std::collections::{HashMap, HashSet, VecDeque};

use num_traits::One;
use thiserror::Error;

use crate::ginzburg::DgPresentation;
use crate::gqa::{AlgElement, ArrowId, Coeff, GradedQuiver, Path, VertexId};

pub const DEFAULT_MAX_STEPS: usize = 10_000;
pub const DEFAULT_MAX_BASIS: usize = 100_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    /// Overlap ambiguities resolved before completion gives up.
    pub max_steps: usize,
    /// Largest irreducible-path set that is enumerated.
    pub max_basis: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_steps: DEFAULT_MAX_STEPS,
            max_basis: DEFAULT_MAX_BASIS,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum JacobianError {
    #[error("relation {0} has terms with different endpoints")]
    NonParallel(String),
    #[error("relation {0} uses an arrow outside the degree-0 subquiver")]
    ForeignArrow(String),
    #[error("d² does not vanish on generator(s) {0}; H⁰ is not computed")]
    DSquaredFailed(String),
    #[error("arrow `{arrow}` has degree {degree}, outside [{low}, 0]")]
    OutOfScope { arrow: String, degree: i64, low: i64 },
    #[error("the H⁰ verdict is not finite; no multiplication table")]
    NotFinite,
}

/// A rewriting rule `leading -> tail`; every path of `tail` is smaller than
/// `leading`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rule {
    pub leading: Path,
    pub tail: AlgElement,
}

impl Rule {
    /// The ideal element `leading - tail`.
    pub fn as_element(&self) -> AlgElement {
        let mut x = AlgElement::from_path(self.leading.clone());
        x.add_scaled(&-Coeff::one(), &self.tail);
        x
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CompletionStatus {
    Complete,
    BoundExceeded,
}

#[derive(Debug, Clone)]
pub struct RewritingSystem {
    quiver: GradedQuiver,
    rules: Vec<Rule>,
    index: RuleIndex,
    status: CompletionStatus,
    steps: usize,
}

/// Lookup of rules by leading path: trivial leading paths by vertex, the
/// others in a trie over their words.
#[derive(Debug, Clone)]
struct RuleIndex {
    by_vertex: HashMap<VertexId, usize>,
    children: Vec<HashMap<ArrowId, usize>>,
    terminal: Vec<Option<usize>>,
}

impl Default for RuleIndex {
    fn default() -> Self {
        RuleIndex {
            by_vertex: HashMap::new(),
            children: vec![HashMap::new()],
            terminal: vec![None],
        }
    }
}

impl RuleIndex {
    fn node(&self, word: &[ArrowId]) -> Option<usize> {
        word.iter().try_fold(0, |n, a| self.children[n].get(a).copied())
    }

    fn insert(&mut self, leading: &Path, id: usize) {
        if leading.is_trivial() {
            self.by_vertex.insert(leading.source(), id);
            return;
        }
        let mut n = 0;
        for a in leading.arrows() {
            n = match self.children[n].get(a) {
                Some(&c) => c,
                None => {
                    self.children.push(HashMap::new());
                    self.terminal.push(None);
                    let c = self.children.len() - 1;
                    self.children[n].insert(*a, c);
                    c
                }
            };
        }
        self.terminal[n] = Some(id);
    }

    fn remove(&mut self, leading: &Path) {
        if leading.is_trivial() {
            self.by_vertex.remove(&leading.source());
        } else if let Some(n) = self.node(leading.arrows()) {
            self.terminal[n] = None;
        }
    }

    /// Leftmost occurrence of an indexed leading path in `p`, as the rule id
    /// and written positions `(start, end)`. A length-0 leading path `e_x`
    /// matches at the first visit of `p` to `x`.
    fn find(&self, q: &GradedQuiver, p: &Path) -> Option<(usize, (usize, usize))> {
        if !self.by_vertex.is_empty() {
            for (i, v) in q.path_vertices(p).iter().enumerate() {
                if let Some(id) = self.by_vertex.get(v) {
                    return Some((*id, (i, i)));
                }
            }
        }
        let w = p.arrows();
        for start in 0..w.len() {
            let mut n = 0;
            for (k, a) in w[start..].iter().enumerate() {
                match self.children[n].get(a) {
                    Some(&c) => n = c,
                    None => break,
                }
                if let Some(id) = self.terminal[n] {
                    return Some((id, (start, start + k + 1)));
                }
            }
        }
        None
    }
}

/// One overlap ambiguity `A·B·C` between `L_i = A·B` and `L_j = B·C`.
struct Overlap {
    left: Path,
    right: Path,
}

impl RewritingSystem {
    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn status(&self) -> CompletionStatus {
        self.status
    }

    pub fn is_complete(&self) -> bool {
        self.status == CompletionStatus::Complete
    }

    /// Number of overlap ambiguities examined during completion.
    pub fn steps(&self) -> usize {
        self.steps
    }

    pub fn quiver(&self) -> &GradedQuiver {
        &self.quiver
    }

    pub fn is_irreducible(&self, p: &Path) -> bool {
        self.index.find(&self.quiver, p).is_none()
    }

    /// Normal form of `x` modulo the rules.
    pub fn reduce(&self, x: &AlgElement) -> AlgElement {
        let find = |p: &Path| self.index.find(&self.quiver, p).map(|(i, m)| (&self.rules[i], m));
        reduce_with(&self.quiver, find, x, &Cell::new(usize::MAX)).expect("unbounded")
    }

    pub fn reduce_path(&self, p: &Path) -> AlgElement {
        self.reduce(&AlgElement::from_path(p.clone()))
    }

    /// Resolves every overlap ambiguity through both rules and reports the
    /// ones that do not join.
    pub fn unresolved_overlaps(&self) -> Vec<String> {
        let mut out = Vec::new();
        for (i, ri) in self.rules.iter().enumerate() {
            for (j, rj) in self.rules.iter().enumerate() {
                for o in overlaps(&self.quiver, &ri.leading, &rj.leading) {
                    let s = s_element(ri, rj, &o);
                    let nf = self.reduce(&s);
                    if !nf.is_zero() {
                        out.push(format!("rules {i}/{j}: {}", self.quiver.display_element(&nf)));
                    }
                }
            }
        }
        out
    }
}

/// Finds an occurrence of `leading` in `p`: for a length-0 leading path
/// `e_x`, the first visit of `p` to `x`; otherwise the first block of letters.
/// Returns the written positions `(start, end)`.
fn find_match(q: &GradedQuiver, leading: &Path, p: &Path) -> Option<(usize, usize)> {
    if leading.is_trivial() {
        let x = leading.source();
        return q.path_vertices(p).iter().position(|v| *v == x).map(|i| (i, i));
    }
    p.contains_word(leading.arrows()).map(|i| (i, i + leading.len()))
}

/// Normal form of `x`; `None` once the rewrites would produce more than
/// `budget` terms in total.
fn reduce_with<'a, F>(q: &GradedQuiver, find: F, x: &AlgElement, budget: &Cell<usize>) -> Option<AlgElement>
where
    F: Fn(&Path) -> Option<(&'a Rule, (usize, usize))>,
{
    let mut work = x.clone();
    let mut out = AlgElement::zero();
    while let Some((p, c)) = work.pop_leading() {
        match find(&p) {
            None => out.add_term(c, p),
            Some((rule, (start, end))) => {
                budget.set(budget.get().checked_sub(rule.tail.len().max(1))?);
                if rule.tail.is_zero() {
                    continue;
                }
                let u = AlgElement::from_path(q.subpath(&p, 0, start));
                let v = AlgElement::from_path(q.subpath(&p, end, p.len()));
                work.add_scaled(&c, &u.mul(&rule.tail).mul(&v));
            }
        }
    }
    Some(out)
}

/// Proper overlaps: a nonempty proper suffix of `li` equal to a proper prefix
/// of `lj`.
fn overlaps(q: &GradedQuiver, li: &Path, lj: &Path) -> Vec<Overlap> {
    let (a, b) = (li.arrows(), lj.arrows());
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let max = a.len().min(b.len());
    (1..max)
        .filter(|&o| a[a.len() - o..] == b[..o])
        .map(|o| Overlap {
            left: q.subpath(li, 0, a.len() - o),
            right: q.subpath(lj, o, b.len()),
        })
        .collect()
}

/// `A·T_j - T_i·C`, the difference of the two one-step reductions of `A·B·C`.
fn s_element(ri: &Rule, rj: &Rule, o: &Overlap) -> AlgElement {
    let a = AlgElement::from_path(o.left.clone());
    let c = AlgElement::from_path(o.right.clone());
    &a.mul(&rj.tail) - &ri.tail.mul(&c)
}

struct Completer<'q> {
    quiver: &'q GradedQuiver,
    rules: Vec<Option<Rule>>,
    index: RuleIndex,
    pairs: VecDeque<(usize, usize)>,
    /// rewrite terms left before completion gives up
    budget: Cell<usize>,
}

/// Rewrite terms allowed per unit of the overlap bound. Reducing a single
/// overlap can take exponentially many rewrites, so the overlap count alone
/// does not bound the work.
const WORK_PER_STEP: usize = 200;

impl Completer<'_> {
    fn reduce(&self, x: &AlgElement) -> Option<AlgElement> {
        reduce_with(
            self.quiver,
            |p| {
                self.index
                    .find(self.quiver, p)
                    .map(|(i, m)| (self.rules[i].as_ref().expect("indexed rules are alive"), m))
            },
            x,
            &self.budget,
        )
    }

    fn queue(&mut self, i: usize, j: usize) {
        self.pairs.push_back((i, j));
    }

    /// Adds an ideal element, interreducing the rule set as rules appear.
    /// Returns `None` when the rewrite budget runs out.
    fn insert(&mut self, element: AlgElement) -> Option<()> {
        let mut pending = vec![element];
        while !pending.is_empty() {
            // smallest leading path first keeps the rule set small
            let idx = (0..pending.len())
                .min_by(|&i, &j| pending[i].leading().map(|l| l.0).cmp(&pending[j].leading().map(|l| l.0)))
                .expect("nonempty");
            let g = pending.swap_remove(idx);
            let h = self.reduce(&g)?.monic();
            let (leading, _) = match h.leading() {
                Some((p, _)) => (p.clone(), ()),
                None => continue,
            };
            let mut tail = AlgElement::from_path(leading.clone());
            tail.add_scaled(&-Coeff::one(), &h);
            let rule = Rule { leading, tail };
            for slot in self.rules.iter_mut() {
                let displaced = match slot {
                    Some(old) => find_match(self.quiver, &rule.leading, &old.leading).is_some(),
                    None => false,
                };
                if displaced {
                    let old = slot.take().expect("alive");
                    self.index.remove(&old.leading);
                    pending.push(old.as_element());
                }
            }
            let id = self.rules.len();
            self.index.insert(&rule.leading, id);
            self.rules.push(Some(rule));
            for other in 0..id {
                if self.rules[other].is_some() {
                    self.queue(id, other);
                    self.queue(other, id);
                }
            }
            self.queue(id, id);
        }
        Some(())
    }

    fn finish(self, steps: usize, status: CompletionStatus) -> RewritingSystem {
        // leading paths form an antichain, so no tail contains its own
        // rule's leading path and the full index can reduce every tail; an
        // abandoned completion keeps its tails as they are
        if status == CompletionStatus::Complete {
            self.budget.set(usize::MAX);
        }
        let mut rules: Vec<Rule> = self
            .rules
            .iter()
            .flatten()
            .map(|r| Rule {
                leading: r.leading.clone(),
                tail: match status {
                    CompletionStatus::Complete => self.reduce(&r.tail).expect("unbounded"),
                    CompletionStatus::BoundExceeded => r.tail.clone(),
                },
            })
            .collect();
        rules.sort_by(|a, b| a.leading.cmp(&b.leading));
        let mut index = RuleIndex::default();
        for (i, r) in rules.iter().enumerate() {
            index.insert(&r.leading, i);
        }
        RewritingSystem {
            quiver: self.quiver.clone(),
            rules,
            index,
            status,
            steps,
        }
    }
}

/// Buchberger-style completion of the ideal generated by `relations`.
pub fn complete_rewriting(
    q: &GradedQuiver,
    relations: &[AlgElement],
    max_steps: usize,
) -> Result<RewritingSystem, JacobianError> {
    for r in relations {
        let mut paths = r.paths();
        if let Some(first) = paths.next() {
            if !paths.all(|p| p.is_parallel(first)) {
                return Err(JacobianError::NonParallel(q.display_element(r)));
            }
        }
    }
    let mut c = Completer {
        quiver: q,
        rules: Vec::new(),
        index: RuleIndex::default(),
        pairs: VecDeque::new(),
        budget: Cell::new(max_steps.saturating_add(1).saturating_mul(WORK_PER_STEP)),
    };
    let mut steps = 0usize;
    for r in relations {
        if c.insert(r.clone()).is_none() {
            return Ok(c.finish(steps, CompletionStatus::BoundExceeded));
        }
    }
    while let Some((i, j)) = c.pairs.pop_front() {
        let (ri, rj) = match (&c.rules[i], &c.rules[j]) {
            (Some(ri), Some(rj)) => (ri.clone(), rj.clone()),
            _ => continue,
        };
        for o in overlaps(q, &ri.leading, &rj.leading) {
            if steps >= max_steps {
                return Ok(c.finish(steps, CompletionStatus::BoundExceeded));
            }
            steps += 1;
            let s = s_element(&ri, &rj, &o);
            if c.insert(s).is_none() {
                return Ok(c.finish(steps, CompletionStatus::BoundExceeded));
            }
            // a displaced parent invalidates its remaining overlaps
            if c.rules[i].is_none() || c.rules[j].is_none() {
                break;
            }
        }
    }
    Ok(c.finish(steps, CompletionStatus::Complete))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum H0Verdict {
    Finite { dimension: usize, basis: Vec<Path> },
    /// A cycle all of whose powers are irreducible.
    Infinite { witness: Path },
    Undetermined { reason: String },
}

#[derive(Debug, Clone)]
pub struct H0Result {
    pub verdict: H0Verdict,
    pub relations: Vec<AlgElement>,
    pub system: RewritingSystem,
    /// Arrows of the subquiver the quotient is taken over.
    pub arrows: Vec<ArrowId>,
    pub notes: Vec<String>,
}

impl H0Result {
    pub fn dimension(&self) -> Option<usize> {
        match &self.verdict {
            H0Verdict::Finite { dimension, .. } => Some(*dimension),
            _ => None,
        }
    }

    pub fn basis(&self) -> Option<&[Path]> {
        match &self.verdict {
            H0Verdict::Finite { basis, .. } => Some(basis),
            _ => None,
        }
    }

    pub fn quiver(&self) -> &GradedQuiver {
        self.system.quiver()
    }
}

/// Generators of the degree-0 image of `d`: `∂_a W` for `|a| = 3 - n`,
/// projected onto degree 0.
pub fn degree_zero_relations(pres: &DgPresentation) -> Vec<AlgElement> {
    let q = pres.base_quiver();
    let target = 3 - pres.n();
    q.arrows()
        .filter(|(_, a)| a.degree == target)
        .map(|(id, _)| {
            let d = pres.differential_on_generator(pres.dual_of(id));
            d.iter()
                .filter(|(p, _)| q.degree(p) == 0)
                .map(|(p, c)| (c.clone(), p.clone()))
                .collect::<AlgElement>()
        })
        .filter(|r| !r.is_zero())
        .collect()
}

/// `H⁰ Γ_n(Q, W)`, decided within `bounds`.
pub fn h0(pres: &DgPresentation, bounds: Bounds) -> Result<H0Result, JacobianError> {
    let report = pres.check_d_squared();
    if !report.passed() {
        let names: Vec<&str> = report.residues.iter().map(|r| r.generator.as_str()).collect();
        return Err(JacobianError::DSquaredFailed(names.join(", ")));
    }
    let q = pres.base_quiver();
    let low = 3 - pres.n();
    if let Some((_, a)) = q.arrows().find(|(_, a)| a.degree > 0 || a.degree < low) {
        return Err(JacobianError::OutOfScope {
            arrow: a.name.clone(),
            degree: a.degree,
            low,
        });
    }
    let arrows: Vec<ArrowId> = q.arrows().filter(|(_, a)| a.degree == 0).map(|(id, _)| id).collect();
    let mut res = quotient(q, &arrows, degree_zero_relations(pres), bounds)?;
    if pres.n() == 3 {
        res.notes
            .push("quotient of the non-completed path algebra; completed Jacobian algebras may differ".into());
    }
    Ok(res)
}

/// The algebra `kQ'/(relations)` where `Q'` is the subquiver on `arrows`.
pub fn quotient(
    q: &GradedQuiver,
    arrows: &[ArrowId],
    relations: Vec<AlgElement>,
    bounds: Bounds,
) -> Result<H0Result, JacobianError> {
    let allowed: HashSet<ArrowId> = arrows.iter().copied().collect();
    for r in &relations {
        if r.paths().any(|p| p.arrows().iter().any(|a| !allowed.contains(a))) {
            return Err(JacobianError::ForeignArrow(q.display_element(r)));
        }
    }
    let system = complete_rewriting(q, &relations, bounds.max_steps)?;
    let verdict = if system.is_complete() {
        analyze(&system, arrows, bounds.max_basis)
    } else {
        H0Verdict::Undetermined {
            reason: format!("completion did not finish within max_steps = {}", bounds.max_steps),
        }
    };
    Ok(H0Result {
        verdict,
        relations,
        system,
        arrows: arrows.to_vec(),
        notes: Vec::new(),
    })
}

/// Decides finiteness of the irreducible-path set of a complete system.
///
/// Irreducible words of length `K = max(1, L - 1)` (with `L` the longest
/// leading word) form the states of a finite automaton whose walks are
/// exactly the long irreducible words; a cycle there is an infinite family.
fn analyze(system: &RewritingSystem, arrows: &[ArrowId], max_basis: usize) -> H0Verdict {
    let q = system.quiver();
    let killed: HashSet<VertexId> = system
        .rules()
        .iter()
        .filter(|r| r.leading.is_trivial())
        .map(|r| r.leading.source())
        .collect();
    let words: HashSet<&[ArrowId]> = system
        .rules()
        .iter()
        .filter(|r| !r.leading.is_trivial())
        .map(|r| r.leading.arrows())
        .collect();
    let longest = words.iter().map(|w| w.len()).max().unwrap_or(0);
    let k = longest.saturating_sub(1).max(1);

    let mut by_target: HashMap<VertexId, Vec<ArrowId>> = HashMap::new();
    for a in arrows {
        by_target.entry(q.arrow(*a).target).or_default().push(*a);
    }
    for v in by_target.values_mut() {
        v.sort();
    }
    // precompose `p` with `a`, if the result stays irreducible
    let extend = |p: &Path, a: ArrowId| -> Option<Path> {
        let src = q.arrow(a).source;
        if killed.contains(&src) {
            return None;
        }
        let next = p.then_arrow(a, src);
        let w = next.arrows();
        for l in 1..=longest.min(w.len()) {
            if words.contains(&w[w.len() - l..]) {
                return None;
            }
        }
        Some(next)
    };
    let successors = |p: &Path| -> Vec<(ArrowId, Path)> {
        by_target
            .get(&p.source())
            .map(|list| list.iter().filter_map(|a| extend(p, *a).map(|n| (*a, n))).collect())
            .unwrap_or_default()
    };

    // irreducible paths up to length k
    let mut short: Vec<Path> = q.vertex_ids().filter(|v| !killed.contains(v)).map(Path::trivial).collect();
    let mut frontier = short.clone();
    for _ in 0..k {
        let mut next = Vec::new();
        for p in &frontier {
            next.extend(successors(p).into_iter().map(|(_, n)| n));
        }
        short.extend(next.iter().cloned());
        if short.len() > max_basis {
            return H0Verdict::Undetermined {
                reason: format!("more than {max_basis} irreducible paths"),
            };
        }
        frontier = next;
    }

    // automaton on length-k words
    let states: Vec<Path> = frontier;
    let index: HashMap<&[ArrowId], usize> = states.iter().enumerate().map(|(i, p)| (p.arrows(), i)).collect();
    let edges: Vec<Vec<(ArrowId, usize)>> = states
        .iter()
        .map(|p| {
            successors(p)
                .into_iter()
                .map(|(a, n)| {
                    let tail = &n.arrows()[1..];
                    (a, index[tail])
                })
                .collect()
        })
        .collect();
    if let Some(letters) = find_cycle(&edges) {
        let witness = q.path(&letters).expect("automaton cycles are quiver cycles");
        return H0Verdict::Infinite { witness };
    }

    // acyclic: every irreducible path is finite; enumerate them all
    let mut basis = short;
    let mut frontier: Vec<Path> = basis.iter().filter(|p| p.len() == k).cloned().collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for p in &frontier {
            next.extend(successors(p).into_iter().map(|(_, n)| n));
        }
        basis.extend(next.iter().cloned());
        if basis.len() > max_basis {
            return H0Verdict::Undetermined {
                reason: format!("more than {max_basis} irreducible paths"),
            };
        }
        frontier = next;
    }
    basis.sort();
    H0Verdict::Finite {
        dimension: basis.len(),
        basis,
    }
}

/// Iterative DFS; returns the edge labels of some directed cycle.
fn find_cycle(edges: &[Vec<(ArrowId, usize)>]) -> Option<Vec<ArrowId>> {
    #[derive(Clone, Copy, PartialEq)]
    enum Color {
        White,
        Grey,
        Black,
    }
    let mut color = vec![Color::White; edges.len()];
    for root in 0..edges.len() {
        if color[root] != Color::White {
            continue;
        }
        // stack of (node, next edge index, label of the edge that entered node)
        let mut stack: Vec<(usize, usize, Option<ArrowId>)> = vec![(root, 0, None)];
        color[root] = Color::Grey;
        while let Some(top) = stack.last_mut() {
            let (node, ei) = (top.0, top.1);
            if ei < edges[node].len() {
                top.1 += 1;
                let (label, succ) = edges[node][ei];
                match color[succ] {
                    Color::White => {
                        color[succ] = Color::Grey;
                        stack.push((succ, 0, Some(label)));
                    }
                    Color::Grey => {
                        let start = stack.iter().position(|f| f.0 == succ).expect("grey node on stack");
                        let mut letters: Vec<ArrowId> = stack[start + 1..].iter().map(|f| f.2.expect("entered")).collect();
                        letters.push(label);
                        return Some(letters);
                    }
                    Color::Black => {}
                }
            } else {
                color[node] = Color::Black;
                stack.pop();
            }
        }
    }
    None
}

/// Product of two basis paths in a finite `H⁰`, as a combination of basis paths.
pub fn h0_multiply(res: &H0Result, x: &Path, y: &Path) -> Result<AlgElement, JacobianError> {
    if !matches!(res.verdict, H0Verdict::Finite { .. }) {
        return Err(JacobianError::NotFinite);
    }
    Ok(match x.compose(y) {
        Some(p) => res.system.reduce_path(&p),
        None => AlgElement::zero(),
    })
}

/// All products `x · y` of basis paths for which the concatenation is defined.
pub fn multiplication_table(res: &H0Result) -> Result<Vec<(Path, Path, AlgElement)>, JacobianError> {
    let basis = res.basis().ok_or(JacobianError::NotFinite)?;
    let mut out = Vec::new();
    for x in basis {
        for y in basis {
            if x.compose(y).is_some() {
                out.push((x.clone(), y.clone(), h0_multiply(res, x, y)?));
            }
        }
    }
    Ok(out)
}
