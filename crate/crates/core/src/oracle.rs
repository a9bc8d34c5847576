//! Brute-force cross-checks for the closed-form calculators.
//!
//! Nothing here calls into the calculators or the torus-weight machinery of
//! [`crate::rep`]: dimension functions come from per-group closed formulas,
//! homotopy is read off a truncated two-term injective resolution, dihedral
//! stalks are computed from explicit matrices, and fixed-point dimensions of
//! the finite rotation groups come from enumerating the groups as `3x3`
//! matrices.

use std::collections::BTreeMap;
use std::fmt;

use crate::characters::{fixed_dim, RotationGroup};
use crate::error::{Result, StemsError};
use crate::groups::{GroupId, Irreducible};
use crate::lines::{ExtendedNat, LineSet, INF};
use crate::rep::{to_normalizer_form, VirtualRep};
use crate::stems::{BlockAnswer, BlockId, SEMISIMPLE_OMIT};

pub type DegreeTable = BTreeMap<i64, ExtendedNat>;

/// `dim_R U^{C_s}` from the per-group closed formulas.
pub fn closed_form_dim_cyclic(rep: &VirtualRep, s: u64) -> i64 {
    assert!(s >= 1);
    let divides = |w: u64| i64::from(w.is_multiple_of(s));
    let group = rep.group();
    rep.terms()
        .map(|(irr, m)| {
            let d = match (group, irr) {
                (_, Irreducible::Z(n)) => 2 * divides(n),
                (_, Irreducible::Delta) => 1,
                (GroupId::O2, Irreducible::Sigma(n)) => 2 * divides(n),
                // odd s: s | n; even s: (s/2) | n
                (GroupId::Pin2, Irreducible::Sigma(n)) => {
                    if s % 2 == 1 {
                        2 * divides(n)
                    } else {
                        2 * i64::from(n % (s / 2) == 0)
                    }
                }
                (_, Irreducible::H(k)) => 4 * divides(k),
                (GroupId::SO3, Irreducible::W(dim)) => {
                    let i = (dim - 1) / 2;
                    1 + 2 * (i / s) as i64
                }
                (GroupId::SU2, Irreducible::W(dim)) => {
                    let i = (dim - 1) / 2;
                    1 + 2 * (1..=i).filter(|j| (2 * j) % s == 0).count() as i64
                }
                (GroupId::SU2, Irreducible::V(dim)) => {
                    let i = dim / 2;
                    4 * (1..=i).filter(|j| (2 * j - 1) % s == 0).count() as i64
                }
                _ => unreachable!("{irr} over {group}"),
            };
            m * d
        })
        .sum()
}

/// Largest torus weight, read from the irreducible labels.
fn label_weight_bound(rep: &VirtualRep) -> u64 {
    rep.terms()
        .map(|(irr, _)| match (rep.group(), irr) {
            (_, Irreducible::Z(n)) => n,
            (GroupId::Pin2, Irreducible::Sigma(n)) => 2 * n,
            (_, Irreducible::Sigma(n)) => n,
            (_, Irreducible::H(m)) => m,
            (_, Irreducible::Delta) => 0,
            (_, Irreducible::W(dim)) => dim,
            (_, Irreducible::V(dim)) => dim,
        })
        .max()
        .unwrap_or(0)
}

fn check_cutoff(rep: &VirtualRep, s_max: u64) -> Result<()> {
    let max_weight = label_weight_bound(rep);
    if s_max <= max_weight {
        return Err(StemsError::TruncationUnsound { cutoff: s_max, max_weight });
    }
    Ok(())
}

/// `bigoplus_{s <= S_max} Sigma^{d(s) - 1} I_s` on a window of degrees, where
/// `I = Sigma^2 Q[c]^*` has one class in each degree `2, 4, 6, ...`.
///
/// When `w_sign` is present, each class carries the sign by which `W`
/// acts: the class coming from internal degree `D` of the Laurent ring has
/// weight `(-1)^{D/2}`, times the global twist.
#[derive(Debug, Clone)]
pub struct TruncatedTorsionModule {
    pub s_max: u64,
    pub window: (i64, i64),
    pub dims: BTreeMap<(u64, i64), u64>,
    pub w_sign: Option<BTreeMap<(u64, i64), i8>>,
}

/// Classes of `Sigma^{d-1} I` sit in degrees `d + 1, d + 3, ...`.
fn piece_has_class(d: i64, k: i64) -> bool {
    k > d && (k - d - 1).rem_euclid(2) == 0
}

/// `W`-weight of the class of `Sigma^{d-1} I` in degree `k`, before twisting.
fn piece_weight(k: i64) -> i8 {
    // internal degree D = k + 1 of the Laurent ring
    let internal = k + 1;
    debug_assert!(internal.rem_euclid(2) == 0);
    if internal.rem_euclid(4) == 0 {
        1
    } else {
        -1
    }
}

impl TruncatedTorsionModule {
    pub fn build(
        d: impl Fn(u64) -> i64,
        s_max: u64,
        window: (i64, i64),
        twist: Option<i8>,
    ) -> TruncatedTorsionModule {
        let mut dims = BTreeMap::new();
        let mut signs = BTreeMap::new();
        for s in 1..=s_max {
            let ds = d(s);
            for k in window.0..=window.1 {
                let present = piece_has_class(ds, k);
                dims.insert((s, k), u64::from(present));
                if present {
                    if let Some(t) = twist {
                        signs.insert((s, k), piece_weight(k) * t);
                    }
                }
            }
        }
        TruncatedTorsionModule { s_max, window, dims, w_sign: twist.map(|_| signs) }
    }

    fn is_counted(&self, s: u64, k: i64) -> bool {
        let present = self.dims.get(&(s, k)).copied().unwrap_or(0) == 1;
        match &self.w_sign {
            None => present,
            Some(signs) => present && signs.get(&(s, k)) == Some(&1),
        }
    }

    /// Dimension of the (invariant part of the) module in degree `k`.
    pub fn counted_dim(&self, k: i64) -> u64 {
        (1..=self.s_max).filter(|&s| self.is_counted(s, k)).count() as u64
    }

    /// Coordinates of the diagonal class `1 -> (1, 1, ..., 1)` in degree `-1`.
    fn diagonal(&self) -> Vec<i64> {
        (1..=self.s_max).map(|s| i64::from(self.is_counted(s, -1))).collect()
    }
}

fn rank_of_column(v: &[i64]) -> u64 {
    u64::from(v.iter().any(|&x| x != 0))
}

/// Homology of `Q -> Sigma^U II` for a circle group, on `lo..=hi`.
pub fn oracle_torus(rep: &VirtualRep, lo: i64, hi: i64, s_max: u64) -> Result<DegreeTable> {
    let group = rep.group();
    if !group.is_torus() {
        return Err(StemsError::Unsupported { group, what: "torus oracle" });
    }
    check_cutoff(rep, s_max)?;
    let d = |s| closed_form_dim_cyclic(rep, s);
    let module = TruncatedTorsionModule::build(d, s_max, (lo.min(-1), hi.max(-1)), None);
    let rank = rank_of_column(&module.diagonal());
    let mut table = DegreeTable::new();
    for k in lo..=hi {
        let kernel = if k == 0 { 1 - rank } else { 0 };
        let cokernel = module.counted_dim(k) - if k == -1 { rank } else { 0 };
        // every subgroup past the cutoff has d = 0 and contributes here
        let tail = piece_has_class(0, k);
        let value = if tail { INF } else { ExtendedNat::Finite(kernel + cokernel) };
        table.insert(k, value);
    }
    Ok(table)
}

/// Cyclic block of `O(2)` or `Pin(2)` from the resolution, taking
/// `W`-invariants degreewise. Writing `U = U' + b delta`, the answer is the
/// `b`-fold suspension of the invariants of `Q -> Sigma^{U'} II`, twisted by
/// the sign representation when `b` is odd.
pub fn oracle_o2_cyclic(rep: &VirtualRep, lo: i64, hi: i64, s_max: u64) -> Result<DegreeTable> {
    let group = rep.group();
    if !matches!(group, GroupId::O2 | GroupId::Pin2) {
        return Err(StemsError::Unsupported { group, what: "O(2)-type cyclic oracle" });
    }
    check_cutoff(rep, s_max)?;
    let b = rep.mult(Irreducible::Delta);
    let twist: i8 = if b.rem_euclid(2) == 0 { 1 } else { -1 };
    let d_prime = |s| closed_form_dim_cyclic(rep, s) - b;
    let window = ((lo - b).min(-1), (hi - b).max(-1));
    let module = TruncatedTorsionModule::build(d_prime, s_max, window, Some(twist));

    // the unit class Q sits in degree 0 with trivial action, then twisted
    let source_dim: u64 = u64::from(twist == 1);
    let rank = if source_dim == 1 { rank_of_column(&module.diagonal()) } else { 0 };

    let mut table = DegreeTable::new();
    for target in lo..=hi {
        let k = target - b;
        let kernel = if k == 0 { source_dim - rank } else { 0 };
        let cokernel = module.counted_dim(k) - if k == -1 { rank } else { 0 };
        let tail = piece_has_class(0, k) && piece_weight(k) * twist == 1;
        let value = if tail { INF } else { ExtendedNat::Finite(kernel + cokernel) };
        table.insert(target, value);
    }
    Ok(table)
}

type Matrix = Vec<Vec<f64>>;

const EPS: f64 = 1e-9;

fn identity(n: usize) -> Matrix {
    (0..n).map(|i| (0..n).map(|j| if i == j { 1.0 } else { 0.0 }).collect()).collect()
}

fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let m = b[0].len();
    (0..n).map(|i| (0..m).map(|j| (0..b.len()).map(|k| a[i][k] * b[k][j]).sum()).collect()).collect()
}

fn mat_vec(a: &Matrix, v: &[f64]) -> Vec<f64> {
    a.iter().map(|row| row.iter().zip(v).map(|(x, y)| x * y).sum()).collect()
}

fn rotation2(angle: f64) -> Matrix {
    vec![vec![angle.cos(), -angle.sin()], vec![angle.sin(), angle.cos()]]
}

/// Basis of the common fixed space of `gens`, by row reduction of the stacked `g - 1`.
fn fixed_space(gens: &[Matrix]) -> Vec<Vec<f64>> {
    let n = gens[0].len();
    let mut rows: Vec<Vec<f64>> = Vec::new();
    for g in gens {
        for (i, row) in g.iter().enumerate() {
            let mut r = row.clone();
            r[i] -= 1.0;
            rows.push(r);
        }
    }
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..rows.len()).max_by(|&a, &b| rows[a][c].abs().total_cmp(&rows[b][c].abs())) else {
            break;
        };
        if rows[p][c].abs() < 1e-7 {
            continue;
        }
        rows.swap(r, p);
        let pivot = rows[r][c];
        for x in rows[r].iter_mut() {
            *x /= pivot;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            let f = row[c];
            if i != r && f != 0.0 {
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x -= f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (0..n)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![0.0; n];
            v[free] = 1.0;
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -rows[row][free];
            }
            v
        })
        .collect()
}

/// `(dim U^K, det of the Weyl generator on U^K)` for one irreducible, where
/// `K = <rotation, reflection>` and `weyl` normalizes `K`.
fn stalk_of(gens: &[Matrix], weyl: &Matrix) -> Result<(i64, i8)> {
    let basis = fixed_space(gens);
    match basis.as_slice() {
        [] => Ok((0, 1)),
        [v] => {
            let image = mat_vec(weyl, v);
            let ratio: f64 =
                image.iter().zip(v).map(|(a, b)| a * b).sum::<f64>() / v.iter().map(|x| x * x).sum::<f64>();
            if (ratio.abs() - 1.0).abs() > 1e-6 {
                return Err(StemsError::Invariant(format!("Weyl action has eigenvalue {ratio}")));
            }
            Ok((1, if ratio > 0.0 { 1 } else { -1 }))
        }
        _ => Err(StemsError::Invariant("fixed space of an irreducible exceeds one dimension".into())),
    }
}

/// Stalk data `(dim U^{D_2t}, sign of W_t)` of the dihedral (or quaternion)
/// sheaf at `t`, from explicit matrices.
pub fn dihedral_stalk(rep: &VirtualRep, t: u64) -> Result<(i64, i8)> {
    let group = rep.group();
    if !matches!(group, GroupId::O2 | GroupId::Pin2) {
        return Err(StemsError::Unsupported { group, what: "dihedral stalks" });
    }
    let tau = std::f64::consts::TAU;
    let reflection = vec![vec![1.0, 0.0], vec![0.0, -1.0]];
    let mut dim = 0i64;
    let mut sign = 1i8;
    for (irr, m) in rep.terms() {
        let (d, s) = match irr {
            // D_2t = <rotation by 2pi/t, reflection>; W_t generated by rotation by pi/t.
            // sigma_n sends rotation by a to rotation by n a.
            Irreducible::Sigma(n) => {
                let rot = rotation2(tau * n as f64 / t as f64);
                let weyl = rotation2(tau * n as f64 / (2 * t) as f64);
                stalk_of(&[rot, reflection.clone()], &weyl)?
            }
            // rotations act trivially, reflections by -1
            Irreducible::Delta => stalk_of(&[vec![vec![1.0]], vec![vec![-1.0]]], &vec![vec![1.0]])?,
            // the central element of Q_4t acts on h_m, m odd, by -1
            Irreducible::H(_) => {
                let minus_one: Matrix =
                    identity(4).into_iter().map(|r| r.iter().map(|x| -x).collect()).collect();
                stalk_of(&[minus_one], &identity(4))?
            }
            _ => unreachable!("{irr} over {group}"),
        };
        dim += m * d;
        if s == -1 && m.rem_euclid(2) == 1 {
            sign = -sign;
        }
    }
    Ok((dim, sign))
}

/// Dihedral-type block from stalkwise sections on `lo..=hi`. Subgroups with
/// trivial stalk make degree 0 countably infinite.
pub fn oracle_dihedral(rep: &VirtualRep, lo: i64, hi: i64, omit: &[u64]) -> Result<DegreeTable> {
    let t_max = label_weight_bound(rep) + 1;
    let mut counts: BTreeMap<i64, u64> = BTreeMap::new();
    for t in (1..=t_max).filter(|t| !omit.contains(t)) {
        let (dim, sign) = dihedral_stalk(rep, t)?;
        if sign == 1 && dim != 0 {
            *counts.entry(dim).or_insert(0) += 1;
        }
    }
    Ok((lo..=hi)
        .map(|k| {
            let v = if k == 0 { INF } else { ExtendedNat::Finite(counts.get(&k).copied().unwrap_or(0)) };
            (k, v)
        })
        .collect())
}

fn matrix_close(a: &Matrix, b: &Matrix) -> bool {
    a.iter().flatten().zip(b.iter().flatten()).all(|(x, y)| (x - y).abs() < EPS)
}

/// All elements of the group generated by `gens`.
fn closure(gens: &[Matrix]) -> Vec<Matrix> {
    let mut elements = vec![identity(3)];
    let mut frontier = vec![identity(3)];
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = mat_mul(g, &x);
            if !elements.iter().any(|e| matrix_close(e, &y)) {
                elements.push(y.clone());
                frontier.push(y);
            }
        }
    }
    elements
}

fn rotation_generators(group: RotationGroup) -> Vec<Matrix> {
    let half_z = vec![vec![-1.0, 0.0, 0.0], vec![0.0, -1.0, 0.0], vec![0.0, 0.0, 1.0]];
    let half_x = vec![vec![1.0, 0.0, 0.0], vec![0.0, -1.0, 0.0], vec![0.0, 0.0, -1.0]];
    let quarter_z = vec![vec![0.0, -1.0, 0.0], vec![1.0, 0.0, 0.0], vec![0.0, 0.0, 1.0]];
    // cyclic permutation of the coordinates: rotation by 2pi/3 about (1,1,1)
    let third = vec![vec![0.0, 0.0, 1.0], vec![1.0, 0.0, 0.0], vec![0.0, 1.0, 0.0]];
    match group {
        RotationGroup::KleinD4 => vec![half_z, half_x],
        RotationGroup::D8 => vec![quarter_z, half_x],
        RotationGroup::A4 => vec![half_z, half_x, third],
        RotationGroup::S4 => vec![quarter_z, half_x, third],
        RotationGroup::A5 => {
            // icosahedron with vertices at cyclic permutations of (0, +-1, +-phi)
            let phi = (1.0 + 5f64.sqrt()) / 2.0;
            let five = vec![
                vec![0.5, -phi / 2.0, 0.5 / phi],
                vec![phi / 2.0, 0.5 / phi, -0.5],
                vec![0.5 / phi, 0.5, phi / 2.0],
            ];
            vec![half_z, third, five]
        }
    }
}

/// Elements of the rotation group as explicit orthogonal matrices.
pub fn rotation_group_elements(group: RotationGroup) -> Vec<[[f64; 3]; 3]> {
    closure(&rotation_generators(group))
        .into_iter()
        .map(|m| [[m[0][0], m[0][1], m[0][2]], [m[1][0], m[1][1], m[1][2]], [m[2][0], m[2][1], m[2][2]]])
        .collect()
}

fn trace(m: &Matrix) -> f64 {
    (0..m.len()).map(|i| m[i][i]).sum()
}

/// Character of `W(2i+1)` at a rotation matrix, via `Sym^i R^3 = W(2i+1) + Sym^{i-2} R^3`.
/// The traces on symmetric powers are complete homogeneous symmetric
/// polynomials in the eigenvalues, generated from the characteristic polynomial.
fn w_character(m: &Matrix, i: u64) -> f64 {
    let e1 = trace(m);
    let e2 = (e1 * e1 - trace(&mat_mul(m, m))) / 2.0;
    let e3 = 1.0;
    let mut h = vec![1.0f64];
    for k in 1..=i as usize {
        let at = |j: isize| if j < 0 { 0.0 } else { h[j as usize] };
        let k = k as isize;
        h.push(e1 * at(k - 1) - e2 * at(k - 2) + e3 * at(k - 3));
    }
    let i = i as usize;
    h[i] - if i >= 2 { h[i - 2] } else { 0.0 }
}

/// `dim W(2i+1)^H` by averaging the trace over all elements of `H`.
pub fn oracle_char_matrix(group: RotationGroup, i: u64) -> Result<u64> {
    let elements = closure(&rotation_generators(group));
    if elements.len() as u64 != group.order() {
        return Err(StemsError::Invariant(format!(
            "{group:?} generated {} elements, expected {}",
            elements.len(),
            group.order()
        )));
    }
    let avg = elements.iter().map(|g| w_character(g, i)).sum::<f64>() / elements.len() as f64;
    let rounded = avg.round();
    if (avg - rounded).abs() > 1e-6 || rounded < 0.0 {
        return Err(StemsError::Invariant(format!("average trace {avg} for {group:?}, i = {i}")));
    }
    Ok(rounded as u64)
}

type Poly = BTreeMap<(u32, u32, u32), f64>;

fn poly_mul(p: &Poly, q: &Poly) -> Poly {
    let mut out = Poly::new();
    for (&(a, b, c), &x) in p {
        for (&(d, e, f), &y) in q {
            *out.entry((a + d, b + e, c + f)).or_insert(0.0) += x * y;
        }
    }
    out
}

fn monomials(degree: u32) -> Vec<(u32, u32, u32)> {
    let mut out = Vec::new();
    for a in (0..=degree).rev() {
        for b in (0..=degree - a).rev() {
            out.push((a, b, degree - a - b));
        }
    }
    out
}

/// Matrix of `p -> p o g^{-1}` on homogeneous polynomials of the given degree.
fn sym_power(g: &Matrix, degree: u32) -> Matrix {
    let basis = monomials(degree);
    // g^{-1} = g^T for rotations
    let forms: Vec<Poly> = (0..3)
        .map(|row| {
            [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
                .into_iter()
                .zip(0..3)
                .map(|(mono, col)| (mono, g[col][row]))
                .collect()
        })
        .collect();
    let mut out = vec![vec![0.0; basis.len()]; basis.len()];
    for (col, &(a, b, c)) in basis.iter().enumerate() {
        let mut p: Poly = [((0, 0, 0), 1.0)].into();
        for (form, power) in forms.iter().zip([a, b, c]) {
            for _ in 0..power {
                p = poly_mul(&p, form);
            }
        }
        for (row, mono) in basis.iter().enumerate() {
            out[row][col] = p.get(mono).copied().unwrap_or(0.0);
        }
    }
    out
}

fn determinant(mut m: Matrix) -> f64 {
    let n = m.len();
    let mut det = 1.0;
    for c in 0..n {
        let p = (c..n).max_by(|&a, &b| m[a][c].abs().total_cmp(&m[b][c].abs())).unwrap();
        if m[p][c].abs() < 1e-12 {
            return 0.0;
        }
        if p != c {
            m.swap(p, c);
            det = -det;
        }
        det *= m[c][c];
        let top = m[c].clone();
        for row in m.iter_mut().skip(c + 1) {
            let f = row[c] / top[c];
            for (x, y) in row.iter_mut().zip(&top).skip(c) {
                *x -= f * y;
            }
        }
    }
    det
}

/// Determinant of `weyl` on the `H`-fixed part of degree-`degree` polynomials.
fn weyl_det_on_sym(gens: &[Matrix], weyl: &Matrix, degree: u32) -> f64 {
    let sym_gens: Vec<Matrix> = gens.iter().map(|g| sym_power(g, degree)).collect();
    let action = sym_power(weyl, degree);
    let basis = fixed_space(&sym_gens);
    if basis.is_empty() {
        return 1.0;
    }
    // basis vectors have a unit entry at their own free coordinate and zero at the others
    let free: Vec<usize> =
        basis.iter().map(|v| v.iter().position(|&x| x == 1.0).expect("free coordinate")).collect();
    let restricted: Matrix =
        free.iter().map(|&row| basis.iter().map(|v| mat_vec(&action, v)[row]).collect()).collect();
    determinant(restricted)
}

/// Sign by which an order-2 element of the Weyl group of `H` (`A_4` or the
/// Klein group, inside the octahedral group) acts on the top class of
/// `S^{W(2i+1)^H}`, computed on explicit polynomial representations using
/// `Sym^i = W(2i+1) + Sym^{i-2}`.
pub fn oracle_weyl_det(group: RotationGroup, i: u64) -> Result<i8> {
    if !matches!(group, RotationGroup::A4 | RotationGroup::KleinD4) {
        return Err(StemsError::Invariant(format!("{group:?} has no nontrivial Weyl action")));
    }
    let gens = rotation_generators(group);
    let quarter_z = vec![vec![0.0, -1.0, 0.0], vec![1.0, 0.0, 0.0], vec![0.0, 0.0, 1.0]];
    let i = i as u32;
    let top = weyl_det_on_sym(&gens, &quarter_z, i);
    let below = if i >= 2 { weyl_det_on_sym(&gens, &quarter_z, i - 2) } else { 1.0 };
    let det = top / below;
    if (det.abs() - 1.0).abs() > 1e-6 {
        return Err(StemsError::Invariant(format!("Weyl determinant {det} for {group:?}, i = {i}")));
    }
    Ok(if det > 0.0 { 1 } else { -1 })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub what: String,
    pub degree: Option<i64>,
    pub expected: String,
    pub found: String,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.degree {
            Some(k) => {
                write!(f, "{} at degree {k}: oracle {}, calculator {}", self.what, self.expected, self.found)
            }
            None => write!(f, "{}: oracle {}, calculator {}", self.what, self.expected, self.found),
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct OracleReport {
    pub checks: usize,
    pub mismatches: Vec<Mismatch>,
}

impl OracleReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }

    fn compare(&mut self, what: &str, oracle: &DegreeTable, calc: &LineSet) {
        for (&k, &expected) in oracle {
            self.checks += 1;
            let found = calc.query(k);
            if found != expected {
                self.mismatches.push(Mismatch {
                    what: what.to_string(),
                    degree: Some(k),
                    expected: expected.to_string(),
                    found: found.to_string(),
                });
            }
        }
    }
}

/// Check every block of `answer` that has an oracle on `lo..=hi`.
pub fn verify(answer: &BlockAnswer, lo: i64, hi: i64, s_max: u64) -> Result<OracleReport> {
    let mut report = OracleReport::default();
    let rep = &answer.rep;
    let group = rep.group();
    let block =
        |id| answer.block(id).ok_or_else(|| StemsError::Invariant(format!("answer has no {id} block")));
    if group.is_torus() {
        let oracle = oracle_torus(rep, lo, hi, s_max)?;
        report.compare("cyclic block", &oracle, block(BlockId::Cyclic)?);
        return Ok(report);
    }
    let (normal, k) = to_normalizer_form(rep)?;
    let omit: &[u64] = if group.has_isolated_blocks() { &SEMISIMPLE_OMIT } else { &[] };
    let dihedral_id = if group.is_double_cover() { BlockId::Quaternion } else { BlockId::Dihedral };
    let suspend =
        |table: DegreeTable| -> DegreeTable { table.into_iter().map(|(d, v)| (d + k, v)).collect() };
    report.compare(
        "cyclic block",
        &suspend(oracle_o2_cyclic(&normal, lo - k, hi - k, s_max)?),
        block(BlockId::Cyclic)?,
    );
    report.compare(
        &format!("{dihedral_id} block"),
        &suspend(oracle_dihedral(&normal, lo - k, hi - k, omit)?),
        block(dihedral_id)?,
    );
    if group.has_isolated_blocks() {
        for (irr, _) in rep.terms() {
            let Some(i) = irr.half_index().filter(|_| matches!(irr, Irreducible::W(_))) else {
                continue;
            };
            for table in RotationGroup::ALL {
                report.checks += 1;
                let exact = fixed_dim(i, table)?;
                let float = oracle_char_matrix(table, i)?;
                if exact != float {
                    report.mismatches.push(Mismatch {
                        what: format!("dim {irr}^{table:?}"),
                        degree: None,
                        expected: float.to_string(),
                        found: exact.to_string(),
                    });
                }
            }
        }
    }
    Ok(report)
}
