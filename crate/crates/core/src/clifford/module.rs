use num_traits::{One, Zero};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use super::algebra::{multiply, pi_commute, sign_scalar};
use crate::algebra::{GaussianRational, SparseMatrix};
use crate::error::{Error, Result};
use crate::hecke::{verify_relations, LabeledBasis, OperatorFamily, RelationReport};
use crate::perm::{CoxeterDescriptor, CoxeterKind};
use crate::subset::Subset;
use crate::GaussianMatrix;

/// `Ind(ℂ𝒳)` with basis `c_D y`, `D ⊆ [n]`, `y ∈ 𝒳`.
///
/// Basis element `(D, y)` sits at index `y · 2^n + (bits(D) >> 1)`.
#[derive(Clone, Debug)]
pub struct InducedModule {
    pub n: usize,
    pub base: LabeledBasis,
    pub basis: Vec<(Subset, usize)>,
    pub labels: Vec<String>,
    /// `pi[i]` for `i ∈ [0, n-1]`.
    pub pi: Vec<GaussianMatrix>,
    /// `c[j - 1]` is the matrix of `c_j`.
    pub c: Vec<GaussianMatrix>,
}

impl InducedModule {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn index(&self, set: Subset, y: usize) -> usize {
        index_of(self.n, set, y)
    }

    /// The restriction to `H^B_n(0)` as an operator family.
    pub fn restriction(&self) -> OperatorFamily<GaussianRational> {
        OperatorFamily::from_matrices(
            CoxeterDescriptor::type_b(self.n),
            self.labels.clone(),
            self.pi.clone(),
        )
        .expect("matrices are square of the basis size")
    }
}

fn index_of(n: usize, set: Subset, y: usize) -> usize {
    (y << n) | (set.bits() >> 1) as usize
}

fn clifford_subsets(n: usize) -> Vec<Subset> {
    Subset::interval(1, n).subsets().collect()
}

/// Rank, basis, labels and `c_j` matrices of the induced module.
type Skeleton = (
    usize,
    Vec<(Subset, usize)>,
    Vec<String>,
    Vec<GaussianMatrix>,
);

fn skeleton(base: &LabeledBasis) -> Result<Skeleton> {
    if base.descriptor.kind != CoxeterKind::TypeB {
        return Err(Error::InvalidFamily(
            "induction needs a type-B basis".into(),
        ));
    }
    let n = base.n();
    let subsets = clifford_subsets(n);
    let mut basis = Vec::new();
    let mut labels = Vec::new();
    for y in 0..base.len() {
        for &d in &subsets {
            basis.push((d, y));
            labels.push(format!("c{}·{}", d, base.labels[y]));
        }
    }
    let dim = basis.len();
    let c = (1..=n)
        .map(|j| {
            let mut m = SparseMatrix::zeros(dim, dim);
            for (col, &(d, y)) in basis.iter().enumerate() {
                let (sign, e) = times_generator_left(j, d);
                m.set(index_of(n, e, y), col, sign_scalar(sign));
            }
            m
        })
        .collect();
    Ok((n, basis, labels, c))
}

/// `c_j c_D = (-1)^{#{d ∈ D : d < j}} (-1)^{[j ∈ D]} c_{D △ {j}}`.
fn times_generator_left(j: usize, set: Subset) -> (i32, Subset) {
    multiply(Subset::EMPTY.with(j), set)
}

/// Induces a type-B labeled basis, computing `π_i (c_D y)` from the
/// commutation rule and the action `π_i y ∈ {-y, 0, f_i(y)}`.
pub fn induce(base: &LabeledBasis) -> Result<InducedModule> {
    let (n, basis, labels, c) = skeleton(base)?;
    let dim = basis.len();
    let commuted: Vec<Vec<_>> = (0..n)
        .map(|i| {
            clifford_subsets(n)
                .into_iter()
                .map(|d| pi_commute(i, d))
                .collect()
        })
        .collect();
    let pi = (0..n)
        .map(|i| {
            let mut m = SparseMatrix::zeros(dim, dim);
            for (col, &(d, y)) in basis.iter().enumerate() {
                let rank = (d.bits() >> 1) as usize;
                for (e, gamma, delta) in &commuted[i][rank] {
                    if !gamma.is_zero() {
                        m.add_to(index_of(n, *e, y), col, gamma.clone());
                    }
                    if delta.is_zero() {
                        continue;
                    }
                    if base.descents[y].contains(i) {
                        m.add_to(index_of(n, *e, y), col, -delta.clone());
                    } else if let Some(z) = base.transitions[i][y] {
                        m.add_to(index_of(n, *e, z), col, delta.clone());
                    }
                }
            }
            m
        })
        .collect();
    Ok(InducedModule {
        n,
        base: base.clone(),
        basis,
        labels,
        pi,
        c,
    })
}

fn simple_basis(set: Subset, n: usize) -> Result<LabeledBasis> {
    LabeledBasis::singleton(CoxeterDescriptor::type_b(n), &set.to_string(), set)
}

/// `M_I`, induced from the simple module `S_I`.
pub fn build_mi(set: Subset, n: usize) -> Result<InducedModule> {
    induce(&simple_basis(set, n)?)
}

/// `M_I` transcribed from the ribbon table: the action of `π_i` on `c_D ε_I`
/// only looks at boxes `i` and `i + 1`.
pub fn build_mi_table(set: Subset, n: usize) -> Result<InducedModule> {
    let (n, basis, labels, c) = skeleton(&simple_basis(set, n)?)?;
    let dim = basis.len();
    let one = GaussianRational::one;
    let pi = (0..n)
        .map(|i| {
            let mut m = SparseMatrix::zeros(dim, dim);
            for (col, &(d, _)) in basis.iter().enumerate() {
                let mut put = |e: Subset, v: GaussianRational| m.add_to(index_of(n, e, 0), col, v);
                if i == 0 {
                    if set.contains(0) {
                        if d.contains(1) {
                            put(d.without(1), -GaussianRational::i());
                        } else {
                            put(d, -one());
                        }
                    }
                    continue;
                }
                let (a, b) = (d.contains(i), d.contains(i + 1));
                let swapped = d.toggle(i).toggle(i + 1);
                let cleared = d.without(i).without(i + 1);
                match (set.contains(i), a, b) {
                    // i and i + 1 side by side.
                    (false, false, _) => {}
                    (false, true, false) => {
                        put(d, -one());
                        put(swapped, one());
                    }
                    (false, true, true) => {
                        put(d, -one());
                        put(cleared, -one());
                    }
                    // i + 1 below i.
                    (true, false, true) => put(swapped, -one()),
                    (true, _, false) => put(d, -one()),
                    (true, true, true) => put(cleared, -one()),
                }
            }
            m
        })
        .collect();
    Ok(InducedModule {
        n,
        base: simple_basis(set, n)?,
        basis,
        labels,
        pi,
        c,
    })
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum HclReport {
    Ok,
    /// `kind` is one of `quadratic`, `braid`, `clifford_square`,
    /// `clifford_anticommute`, `mixed`; for `mixed`, `i` indexes `π` and `j`
    /// indexes `c`.
    Failed {
        kind: String,
        i: usize,
        j: usize,
    },
}

impl HclReport {
    pub fn is_ok(&self) -> bool {
        matches!(self, HclReport::Ok)
    }
}

impl Serialize for HclReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(1))?;
        match self {
            HclReport::Ok => map.serialize_entry("relations", "ok")?,
            HclReport::Failed { kind, i, j } => {
                #[derive(Serialize)]
                struct Body<'a> {
                    kind: &'a str,
                    i: usize,
                    j: usize,
                }
                map.serialize_entry("failed", &Body { kind, i: *i, j: *j })?
            }
        }
        map.end()
    }
}

fn product(a: &GaussianMatrix, b: &GaussianMatrix) -> GaussianMatrix {
    a.mul(b).expect("square matrices of one size")
}

/// Hecke relations, then Clifford relations, then the mixed relations.
pub fn verify_hcl_relations(m: &InducedModule) -> HclReport {
    let fail = |kind: &str, i: usize, j: usize| HclReport::Failed {
        kind: kind.to_string(),
        i,
        j,
    };
    if let RelationReport::Failed { kind, i, j } = verify_relations(&m.restriction()) {
        return fail(kind.name(), i, j);
    }
    let id = SparseMatrix::identity(m.dim());
    let c = |j: usize| &m.c[j - 1];
    for j in 1..=m.n {
        if product(c(j), c(j)) != id.neg() {
            return fail("clifford_square", j, j);
        }
        for k in j + 1..=m.n {
            if product(c(j), c(k)) != product(c(k), c(j)).neg() {
                return fail("clifford_anticommute", j, k);
            }
        }
    }
    for i in 0..m.n {
        let p = &m.pi[i];
        let p1 = p.add(&id).expect("same size");
        for j in 1..=m.n {
            let ok = if i == 0 && j == 1 {
                product(p, c(1)) == p.scale(&GaussianRational::i())
            } else if i >= 1 && j == i + 1 {
                product(p, c(i + 1)) == product(c(i), p)
            } else if i >= 1 && j == i {
                product(&p1, c(i)) == product(c(i + 1), &p1)
            } else {
                product(p, c(j)) == product(c(j), p)
            };
            if !ok {
                return fail("mixed", i, j);
            }
        }
    }
    HclReport::Ok
}

/// ASCII ribbon of `c_D ε_I`: box `i + 1` sits below box `i` when `i ∈ I`
/// and to its right otherwise; barred entries print as `1~`.
pub fn render_ribbon(set: Subset, barred: Subset, n: usize) -> String {
    let mut rows: Vec<Vec<(usize, String)>> = vec![vec![(0, "0".into())]];
    let mut col = 0;
    for i in 0..n {
        let entry = if barred.contains(i + 1) {
            format!("{}~", i + 1)
        } else {
            (i + 1).to_string()
        };
        if set.contains(i) {
            rows.push(vec![(col, entry)]);
        } else {
            col += 1;
            rows.last_mut().expect("nonempty").push((col, entry));
        }
    }
    let width = 1 + (n + 1).to_string().len() + 1;
    let lines: Vec<String> = rows
        .iter()
        .map(|row| {
            let mut line = String::new();
            for (c, e) in row {
                while line.chars().count() < c * width {
                    line.push(' ');
                }
                line.push_str(&format!("{e:<width$}"));
            }
            line.trim_end().to_string()
        })
        .collect();
    lines.join("\n")
}

/// Is `lower ⋖_I upper` one of the cover relations of the order on the
/// basis of `M_I`?
pub fn is_cover(set: Subset, lower: Subset, upper: Subset, n: usize) -> bool {
    if set.contains(0) && upper.contains(1) && lower == upper.without(1) {
        return true;
    }
    (1..n).any(|i| {
        let rest_l = lower.without(i).without(i + 1);
        let rest_u = upper.without(i).without(i + 1);
        if rest_l != rest_u {
            return false;
        }
        let l = (lower.contains(i), lower.contains(i + 1));
        let u = (upper.contains(i), upper.contains(i + 1));
        if set.contains(i) {
            (l, u) == ((true, false), (false, true)) || (l, u) == ((false, false), (true, true))
        } else {
            (l, u) == ((false, true), (true, false)) || (l, u) == ((false, false), (true, true))
        }
    })
}

/// `c_E y ↦ c_E c_D y`.
pub(crate) fn right_multiplication(m: &InducedModule, d: Subset) -> GaussianMatrix {
    let mut out = SparseMatrix::zeros(m.dim(), m.dim());
    for (col, &(e, y)) in m.basis.iter().enumerate() {
        let (sign, f) = multiply(e, d);
        out.set(m.index(f, y), col, sign_scalar(sign));
    }
    out
}
