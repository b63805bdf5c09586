//! Type-A combinatorics of `D^b(mod kA_n)` and of the orbit categories
//! `C^{(m)} = D^b / τ⁻¹Σᵐ`.
//!
//! `A_n` is linearly oriented with arrows `i+1 -> i`. Indecomposable modules
//! are intervals `[i, j]`; the projectives are `P_j = [1, j]` and the
//! injectives `I_i = [i, n]`. Submodules of `[i, j]` are the intervals
//! `[i, l]`, so `Hom([a, b], [c, d]) ≠ 0` exactly when `a ≤ c ≤ b ≤ d`.
//!
//! The derived category is the mesh category of `ZA_n`. In mesh coordinates
//! `(p, q)` the module `[i, j]` sits at `(i, j - i + 1)`, `τ(p, q) = (p - 1, q)`
//! and `Σ(p, q) = (p + q, n + 1 - q)`.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OrbitError {
    #[error("objects live over A_{0} and A_{1}")]
    AmbientMismatch(usize, usize),
    #[error("interval [{i}, {j}] is not inside 1..={n}")]
    BadInterval { n: usize, i: usize, j: usize },
    #[error("n must be at least 1")]
    EmptyQuiver,
    #[error("m must be at least 1 (got {0})")]
    BadM(usize),
    #[error("unsupported Dynkin type `{0}`; only linearly oriented type A is modeled")]
    UnsupportedType(String),
}

/// An indecomposable object `Σ^shift [i, j]` of `D^b(mod kA_n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DbObject {
    n: usize,
    i: usize,
    j: usize,
    shift: i64,
}

impl DbObject {
    pub fn new(n: usize, i: usize, j: usize, shift: i64) -> Result<Self, OrbitError> {
        if n == 0 {
            return Err(OrbitError::EmptyQuiver);
        }
        if !(1 <= i && i <= j && j <= n) {
            return Err(OrbitError::BadInterval { n, i, j });
        }
        Ok(DbObject { n, i, j, shift })
    }

    /// The projective `P_j = [1, j]` in degree 0.
    pub fn projective(n: usize, j: usize) -> Result<Self, OrbitError> {
        Self::new(n, 1, j, 0)
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn interval(&self) -> (usize, usize) {
        (self.i, self.j)
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn is_projective_module(&self) -> bool {
        self.i == 1
    }

    pub fn is_injective_module(&self) -> bool {
        self.j == self.n
    }

    /// Mesh coordinates `(p, q)` in `ZA_n`.
    pub fn mesh_coords(&self) -> (i64, i64) {
        let n = self.n as i64;
        let (mut p, mut q) = (self.i as i64, (self.j - self.i + 1) as i64);
        // Σ² = τ^{-(n+1)}
        p += self.shift.div_euclid(2) * (n + 1);
        if self.shift.rem_euclid(2) == 1 {
            (p, q) = (p + q, n + 1 - q);
        }
        (p, q)
    }

    pub fn from_mesh_coords(n: usize, p: i64, q: i64) -> Result<Self, OrbitError> {
        let nn = n as i64;
        if !(1 <= q && q <= nn) {
            return Err(OrbitError::BadInterval { n, i: 0, j: 0 });
        }
        // module window: p in 1..=n + 1 - q
        let k = (p - 1).div_euclid(nn + 1);
        let (mut p0, mut q0, mut shift) = (p - k * (nn + 1), q, 2 * k);
        if p0 > nn + 1 - q0 {
            // Σ⁻¹(p, q) = (p - (n + 1 - q), n + 1 - q)
            (p0, q0) = (p0 - (nn + 1 - q0), nn + 1 - q0);
            shift += 1;
        }
        let i = p0 as usize;
        let j = (p0 + q0 - 1) as usize;
        DbObject::new(n, i, j, shift)
    }
}

impl fmt::Display for DbObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.shift {
            0 => write!(f, "[{},{}]", self.i, self.j),
            s => write!(f, "S^{s}[{},{}]", self.i, self.j),
        }
    }
}

fn same_ambient(x: &DbObject, y: &DbObject) -> Result<(), OrbitError> {
    if x.n != y.n {
        return Err(OrbitError::AmbientMismatch(x.n, y.n));
    }
    Ok(())
}

/// `dim Hom_mod([a, b], [c, d])`.
fn hom_modules(x: (usize, usize), y: (usize, usize)) -> usize {
    let ((a, b), (c, d)) = (x, y);
    usize::from(a <= c && c <= b && b <= d)
}

/// `τ` on modules; zero on projectives.
fn tau_module(m: (usize, usize)) -> Option<(usize, usize)> {
    (m.0 >= 2).then(|| (m.0 - 1, m.1 - 1))
}

/// `dim Hom_{D^b}(x, y)`.
pub fn hom_dim_db(x: &DbObject, y: &DbObject) -> Result<usize, OrbitError> {
    same_ambient(x, y)?;
    Ok(match y.shift - x.shift {
        0 => hom_modules(x.interval(), y.interval()),
        // Ext¹(M, N) ≅ D Hom(N, τM)
        1 => tau_module(x.interval()).map_or(0, |t| hom_modules(y.interval(), t)),
        _ => 0,
    })
}

/// Derived AR translation: `τ P_j = Σ⁻¹ I_j`.
pub fn apply_tau(x: &DbObject) -> DbObject {
    match tau_module(x.interval()) {
        Some((i, j)) => DbObject { i, j, ..*x },
        None => DbObject {
            i: x.j,
            j: x.n,
            shift: x.shift - 1,
            ..*x
        },
    }
}

pub fn apply_tau_inverse(x: &DbObject) -> DbObject {
    if x.is_injective_module() {
        DbObject {
            i: 1,
            j: x.i,
            shift: x.shift + 1,
            ..*x
        }
    } else {
        DbObject {
            i: x.i + 1,
            j: x.j + 1,
            ..*x
        }
    }
}

pub fn apply_sigma(x: &DbObject, k: i64) -> DbObject {
    DbObject {
        shift: x.shift + k,
        ..*x
    }
}

/// `F^k` for `F = τ⁻¹Σᵐ`.
pub fn apply_f(x: &DbObject, m: usize, k: i64) -> DbObject {
    let mut y = *x;
    for _ in 0..k.unsigned_abs() {
        y = if k > 0 {
            apply_tau_inverse(&apply_sigma(&y, m as i64))
        } else {
            apply_sigma(&apply_tau(&y), -(m as i64))
        };
    }
    y
}

/// Serre functor, computed on mesh coordinates: `ν(p, q) = (p + q - 1, n + 1 - q)`.
pub fn apply_nu(x: &DbObject) -> DbObject {
    let n = x.n as i64;
    let (p, q) = x.mesh_coords();
    DbObject::from_mesh_coords(x.n, p + q - 1, n + 1 - q).expect("ν stays in ZA_n")
}

/// An object of `C^{(m)}_{A_n}`, stored as its fundamental-domain
/// representative: shift in `0..m`, or shift `m` with a projective interval.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct OrbitObject {
    representative: DbObject,
    m: usize,
}

fn in_domain(x: &DbObject, m: usize) -> bool {
    let m = m as i64;
    (0..m).contains(&x.shift) || (x.shift == m && x.is_projective_module())
}

impl OrbitObject {
    pub fn new(x: DbObject, m: usize) -> Result<Self, OrbitError> {
        if m == 0 {
            return Err(OrbitError::BadM(m));
        }
        let mut y = x;
        // each application of F^{±1} moves the shift by m or m + 1
        while !in_domain(&y, m) {
            y = if y.shift < 0 { apply_f(&y, m, 1) } else { apply_f(&y, m, -1) };
        }
        Ok(OrbitObject { representative: y, m })
    }

    pub fn representative(&self) -> &DbObject {
        &self.representative
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn sigma(&self, k: i64) -> OrbitObject {
        OrbitObject::new(apply_sigma(&self.representative, k), self.m).expect("m >= 1")
    }
}

impl fmt::Display for OrbitObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.representative.fmt(f)
    }
}

/// Hom dimension in the orbit category with the summation window used.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrbitHom {
    pub dim: usize,
    /// `F^k y` for `k` in `lo..=hi` were summed; outside, every term is zero.
    pub window: (i64, i64),
}

/// `Σ_k dim Hom(x, F^k y)`.
pub fn hom_orbit_db(x: &DbObject, y: &DbObject, m: usize) -> Result<OrbitHom, OrbitError> {
    same_ambient(x, y)?;
    if m == 0 {
        return Err(OrbitError::BadM(m));
    }
    // nonzero terms need shift(F^k y) - shift(x) in {0, 1}; F raises the shift
    // by at least m >= 1
    let mut lo = 0i64;
    while apply_f(y, m, lo).shift >= x.shift {
        lo -= 1;
    }
    let mut hi = 0i64;
    while apply_f(y, m, hi).shift <= x.shift + 1 {
        hi += 1;
    }
    let mut dim = 0;
    for k in lo..=hi {
        dim += hom_dim_db(x, &apply_f(y, m, k))?;
    }
    Ok(OrbitHom { dim, window: (lo, hi) })
}

pub fn hom_dim_orbit(x: &OrbitObject, y: &OrbitObject, m: usize) -> Result<usize, OrbitError> {
    Ok(hom_orbit_db(x.representative(), y.representative(), m)?.dim)
}

/// One representative per `F`-orbit of indecomposables, ordered by shift and
/// then by interval.
pub fn enumerate_orbit_objects(n: usize, m: usize) -> Result<Vec<OrbitObject>, OrbitError> {
    if n == 0 {
        return Err(OrbitError::EmptyQuiver);
    }
    if m == 0 {
        return Err(OrbitError::BadM(m));
    }
    let mut out = Vec::new();
    for shift in 0..=m as i64 {
        for i in 1..=n {
            for j in i..=n {
                let x = DbObject::new(n, i, j, shift)?;
                if in_domain(&x, m) {
                    out.push(OrbitObject { representative: x, m });
                }
            }
        }
    }
    Ok(out)
}

/// The image of the free module: the projectives `P_1, …, P_n` in shift 0.
pub fn free_module_summands(n: usize, m: usize) -> Result<Vec<OrbitObject>, OrbitError> {
    (1..=n)
        .map(|j| OrbitObject::new(DbObject::projective(n, j)?, m))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyViolation {
    pub x: String,
    pub y: String,
    pub hom_xy: usize,
    pub hom_y_shifted_x: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyReport {
    pub n: usize,
    pub m: usize,
    pub shift_checked: i64,
    pub objects: usize,
    pub pairs: usize,
    pub violations: Vec<CyViolation>,
}

impl CyReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// `dim Hom(x, y) = dim Hom(y, Σ^{m+1} x)` over all pairs of orbit objects.
pub fn check_cy(n: usize, m: usize) -> Result<CyReport, OrbitError> {
    check_cy_with_shift(n, m, m as i64 + 1)
}

/// The Calabi-Yau comparison with an arbitrary shift (shift `m` is the usual
/// negative control).
pub fn check_cy_with_shift(n: usize, m: usize, shift: i64) -> Result<CyReport, OrbitError> {
    let objects = enumerate_orbit_objects(n, m)?;
    let mut violations = Vec::new();
    for x in &objects {
        let sx = x.sigma(shift);
        for y in &objects {
            let hom_xy = hom_dim_orbit(x, y, m)?;
            let hom_y_shifted_x = hom_dim_orbit(y, &sx, m)?;
            if hom_xy != hom_y_shifted_x {
                violations.push(CyViolation {
                    x: x.to_string(),
                    y: y.to_string(),
                    hom_xy,
                    hom_y_shifted_x,
                });
            }
        }
    }
    Ok(CyReport {
        n,
        m,
        shift_checked: shift,
        objects: objects.len(),
        pairs: objects.len() * objects.len(),
        violations,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TiltingEntry {
    pub object: String,
    pub in_add_t: bool,
    /// `dim Hom(T, L[r])` for `r = 1..=m`.
    pub ext_dims: Vec<usize>,
    pub vanishing: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TiltingReport {
    pub n: usize,
    pub m: usize,
    /// `dim Hom(T, T[r])` for `r = 1..=m`.
    pub self_ext: Vec<usize>,
    /// `dim Hom(T, T[-r])` for `r = 1..m`; informative only.
    pub negative_self_ext: Vec<usize>,
    pub end_dim: usize,
    pub classification: Vec<TiltingEntry>,
}

impl TiltingReport {
    pub fn rigid(&self) -> bool {
        self.self_ext.iter().all(|d| *d == 0)
    }

    /// Objects passing the vanishing test are exactly the summands of `T`.
    pub fn classification_matches(&self) -> bool {
        self.classification.iter().all(|e| e.in_add_t == e.vanishing)
    }

    pub fn vanishing_count(&self) -> usize {
        self.classification.iter().filter(|e| e.vanishing).count()
    }

    pub fn passed(&self) -> bool {
        self.rigid() && self.classification_matches() && self.end_dim == self.n * (self.n + 1) / 2
    }
}

fn hom_sum(from: &[OrbitObject], to: &[OrbitObject], m: usize) -> Result<usize, OrbitError> {
    let mut total = 0;
    for x in from {
        for y in to {
            total += hom_dim_orbit(x, y, m)?;
        }
    }
    Ok(total)
}

/// `m`-cluster tilting checks for `T = ⊕ P_j`.
pub fn check_cluster_tilting(n: usize, m: usize) -> Result<TiltingReport, OrbitError> {
    if m == 0 {
        return Err(OrbitError::BadM(m));
    }
    let t = free_module_summands(n, m)?;
    let shifted = |r: i64| -> Vec<OrbitObject> { t.iter().map(|x| x.sigma(r)).collect() };
    let self_ext = (1..=m as i64)
        .map(|r| hom_sum(&t, &shifted(r), m))
        .collect::<Result<Vec<_>, _>>()?;
    let negative_self_ext = (1..m as i64)
        .map(|r| hom_sum(&t, &shifted(-r), m))
        .collect::<Result<Vec<_>, _>>()?;
    let end_dim = hom_sum(&t, &t, m)?;
    let mut classification = Vec::new();
    for l in enumerate_orbit_objects(n, m)? {
        let ext_dims = (1..=m as i64)
            .map(|r| hom_sum(&t, &[l.sigma(r)], m))
            .collect::<Result<Vec<_>, _>>()?;
        classification.push(TiltingEntry {
            object: l.to_string(),
            in_add_t: t.contains(&l),
            vanishing: ext_dims.iter().all(|d| *d == 0),
            ext_dims,
        });
    }
    Ok(TiltingReport {
        n,
        m,
        self_ext,
        negative_self_ext,
        end_dim,
        classification,
    })
}
