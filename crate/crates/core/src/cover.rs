//! The simple branched cover of the disk determined by a monodromy
//! representation, and the action of liftable braids on the first homology
//! of the capped surface.
//!
//! The surface retracts onto the lift of the star spine that joins the base
//! point to every branch point. Edge `i·n + t` is the lift, starting on sheet
//! `t`, of the arc to branch point `i`. Homology classes are integer chains on
//! these edges.

use std::fmt;

use serde::Serialize;

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::factorization::{BraidFactorization, Factor};
use crate::free_group::FreeWord;
use crate::lattice::{self, add, mul_entry, Matrix};
use crate::monodromy::MonodromyRep;
use crate::perm::Permutation;
use crate::report::ValidationReport;

/// Whether the arcs leave each sheet over the base point in counter-clockwise
/// order `1, …, d`. With this choice `σ_1` lifts to a positive transvection.
const ARCS_COUNTERCLOCKWISE: bool = true;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum End {
    Source,
    Target,
}

/// A closed walk in the spine: edges with traversal signs.
type Walk = Vec<(usize, i8)>;

#[derive(Debug, Clone)]
pub struct CoverModel {
    theta: MonodromyRep,
    sheets: usize,
    branch_points: usize,
    genus: usize,
    boundary_count: usize,
    vertex_count: usize,
    /// Target vertex of each edge; the source of edge `i·n + t` is vertex `t`.
    targets: Vec<usize>,
    /// Edges outside the spanning tree, in index order.
    cotree: Vec<usize>,
    /// Fundamental cycles as edge chains, one per cotree edge.
    cycles: Vec<Vec<i64>>,
    /// Intersection numbers of the fundamental cycles.
    cycle_form: Matrix,
    /// Map from cotree coordinates to homology coordinates.
    projection: Matrix,
    /// Symplectic basis of `H_1` of the capped surface, as edge chains.
    basis: Vec<Vec<i64>>,
    form: Matrix,
}

impl CoverModel {
    pub fn theta(&self) -> &MonodromyRep {
        &self.theta
    }

    pub fn sheets(&self) -> usize {
        self.sheets
    }

    pub fn branch_points(&self) -> usize {
        self.branch_points
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn boundary_count(&self) -> usize {
        self.boundary_count
    }

    /// Rank of `H_1` of the capped surface.
    pub fn rank(&self) -> usize {
        2 * self.genus
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.sheets * self.branch_points
    }

    /// Rank of the cycle space of the spine, `2g + n − 1`.
    pub fn cycle_rank(&self) -> usize {
        self.cotree.len()
    }

    pub fn intersection_form(&self) -> &Matrix {
        &self.form
    }

    pub fn basis_chains(&self) -> &[Vec<i64>] {
        &self.basis
    }

    pub fn fundamental_cycles(&self) -> &[Vec<i64>] {
        &self.cycles
    }

    /// Intersection numbers of the spine's fundamental cycles.
    pub fn cycle_intersections(&self) -> &Matrix {
        &self.cycle_form
    }

    fn edge(&self, branch: usize, sheet: usize) -> usize {
        branch * self.sheets + sheet
    }

    /// Chain of the lift of `word` starting on `sheet` (0-based) through
    /// `theta`, and the sheet where it ends.
    pub fn lift_chain(&self, word: &FreeWord, theta: &MonodromyRep, sheet: usize) -> Result<(Vec<i64>, usize)> {
        if word.rank() != self.branch_points || theta.generator_count() != self.branch_points {
            return Err(Error::RankMismatch { left: self.branch_points, right: word.rank() });
        }
        if sheet >= self.sheets {
            return Err(Error::IndexOutOfRange { index: sheet, len: self.sheets });
        }
        let mut chain = vec![0i64; self.edge_count()];
        let mut t = sheet;
        for &l in word.letters() {
            let i = l.unsigned_abs() as usize - 1;
            let p = &theta.images()[i];
            let next = if l > 0 { p.apply(t) } else { p.inverse().apply(t) };
            let (a, b) = (self.edge(i, t), self.edge(i, next));
            chain[a] = add(chain[a], 1)?;
            chain[b] = add(chain[b], -1)?;
            t = next;
        }
        Ok((chain, t))
    }

    fn is_cycle(&self, chain: &[i64]) -> bool {
        let mut boundary = vec![0i64; self.vertex_count];
        for (e, &c) in chain.iter().enumerate() {
            boundary[e % self.sheets] -= c;
            boundary[self.targets[e]] += c;
        }
        boundary.iter().all(|&x| x == 0)
    }

    /// Coordinates of a cycle in the symplectic basis of `H_1` of the capped
    /// surface.
    pub fn project(&self, chain: &[i64]) -> Result<Vec<i64>> {
        if chain.len() != self.edge_count() {
            return Err(Error::RankMismatch { left: self.edge_count(), right: chain.len() });
        }
        if !self.is_cycle(chain) {
            return Err(Error::Precondition("chain is not a cycle".into()));
        }
        let z: Vec<i64> = self.cotree.iter().map(|&e| chain[e]).collect();
        lattice::vec_mul(&z, &self.projection)
    }

    /// Intersection number of two classes given in basis coordinates.
    pub fn pairing(&self, x: &[i64], y: &[i64]) -> Result<i64> {
        lattice::pairing(x, &self.form, y)
    }

    /// Pushes a chain lifted through `θ ∘ Q_*` forward to the chain of the
    /// transported loops lifted through `θ`: the lift of `w` becomes the lift
    /// of `w * Q`.
    pub fn transport_chain(&self, chain: &[i64], braid: &BraidWord) -> Result<Vec<i64>> {
        if braid.strands() != self.branch_points {
            return Err(Error::StrandMismatch { left: self.branch_points, right: braid.strands() });
        }
        // the map for letter a_k uses θ_k = θ ∘ (a_{k+1} ⋯ a_L)_*
        let mut steps: Vec<(i32, Permutation)> = Vec::with_capacity(braid.len());
        let mut current = self.theta.clone();
        for &a in braid.letters().iter().rev() {
            let i = a.unsigned_abs() as usize - 1;
            let image = if a > 0 { current.images()[i].clone() } else { current.images()[i + 1].clone() };
            steps.push((a, image));
            current = current.transported(&BraidWord::generator(self.branch_points, a)?)?;
        }
        let mut x = chain.to_vec();
        for (a, image) in steps.iter().rev() {
            x = self.edge_map(*a, image, &x)?;
        }
        Ok(x)
    }

    fn edge_map(&self, letter: i32, image: &Permutation, x: &[i64]) -> Result<Vec<i64>> {
        let i = letter.unsigned_abs() as usize - 1;
        let (lo, hi) = (i, i + 1);
        // positive letters move chains from `hi` to `lo` and route `lo`
        // through `hi`; negative letters do the reverse
        let (moved, routed) = if letter > 0 { (hi, lo) } else { (lo, hi) };
        let mut y = x.to_vec();
        for t in 0..self.sheets {
            y[self.edge(lo, t)] = 0;
            y[self.edge(hi, t)] = 0;
        }
        for t in 0..self.sheets {
            let c = x[self.edge(moved, t)];
            let e = self.edge(routed, t);
            y[e] = add(y[e], c)?;
        }
        for t in 0..self.sheets {
            let c = x[self.edge(routed, t)];
            if c == 0 {
                continue;
            }
            let u = image.apply(t);
            let (e1, e2, e3) = (self.edge(routed, t), self.edge(routed, u), self.edge(moved, u));
            y[e1] = add(y[e1], c)?;
            y[e2] = add(y[e2], -c)?;
            y[e3] = add(y[e3], c)?;
        }
        Ok(y)
    }

    /// Action of a liftable braid on `H_1` of the capped surface, as a
    /// matrix acting on row vectors. Composition is multiplicative:
    /// the matrix of `QR` is the matrix of `Q` times the matrix of `R`.
    pub fn lift_action(&self, braid: &BraidWord) -> Result<SymplecticAction> {
        if braid.strands() != self.branch_points {
            return Err(Error::StrandMismatch { left: self.branch_points, right: braid.strands() });
        }
        if !self.theta.is_liftable(braid)? {
            return Err(Error::NotLiftable(format!("{braid} does not preserve the monodromy representation")));
        }
        let matrix = self
            .basis
            .iter()
            .map(|b| self.project(&self.transport_chain(b, braid)?))
            .collect::<Result<Matrix>>()?;
        Ok(SymplecticAction { matrix })
    }

    /// Class of the loop over the twisting arc of a tangency factor `(Q, 1)`:
    /// the lift of `(γ_1 γ_2) * Q` on the lower sheet it swaps. `None` when the
    /// class vanishes in the capped surface.
    pub fn vanishing_class(&self, factor: &Factor) -> Result<Option<Vec<i64>>> {
        if factor.degree != 1 {
            return Err(Error::Precondition(format!("vanishing classes need degree 1, got {}", factor.degree)));
        }
        if !self.theta.is_liftable(&factor.underlying_braid()?)? {
            return Err(Error::NotLiftable(format!("factor with conjugator {} does not lift", factor.conj)));
        }
        let pulled = self.theta.transported(&factor.conj)?;
        let Some((a, _)) = pulled.images()[0].as_transposition() else {
            return Err(Error::Precondition("θ(γ1 * Q) is not a transposition".into()));
        };
        let loop_word = FreeWord::new(self.branch_points, vec![1, 2])?;
        let (chain, end) = self.lift_chain(&loop_word, &pulled, a)?;
        if end != a {
            return Err(Error::Precondition("θ(γ1 * Q) and θ(γ2 * Q) differ".into()));
        }
        let v = self.project(&self.transport_chain(&chain, &factor.conj)?)?;
        Ok(if v.iter().all(|&x| x == 0) { None } else { Some(v) })
    }

    /// The transvection `x ↦ x + ⟨x, v⟩ v`.
    pub fn transvection(&self, v: &[i64]) -> Result<SymplecticAction> {
        let n = self.rank();
        let jv = lattice::vec_mul(v, &lattice::transpose(&self.form))?;
        let mut m = lattice::identity(n);
        for r in 0..n {
            for c in 0..n {
                m[r][c] = add(m[r][c], mul_entry(jv[r], v[c])?)?;
            }
        }
        Ok(SymplecticAction { matrix: m })
    }

    /// Checks the homological shadow of a compatible factorization: node and
    /// cusp factors act trivially, tangency factors act by the transvection
    /// along their vanishing class, and the ordered product matches the lift
    /// of the full twist.
    pub fn pencil_monodromy_check(&self, f: &BraidFactorization) -> ValidationReport {
        let mut report = ValidationReport::new();
        match self.theta.check_compatibility(f) {
            Ok(c) => {
                let detail = c.failures().map(|x| x.name.clone()).collect::<Vec<_>>().join(", ");
                report.push("compatibility", c.pass, detail);
            }
            Err(e) => report.push("compatibility", false, e.to_string()),
        }
        let n = self.rank();
        let mut product = Some(SymplecticAction::identity(n));
        for (j, factor) in f.factors().iter().enumerate() {
            let action = factor.underlying_braid().and_then(|u| self.lift_action(&u));
            let action = match action {
                Ok(a) => a,
                Err(e) => {
                    report.push(format!("factor[{j}]"), false, e.to_string());
                    product = None;
                    continue;
                }
            };
            if factor.degree == 1 {
                let expected = self.vanishing_class(factor).and_then(|v| match v {
                    Some(v) => self.transvection(&v),
                    None => Ok(SymplecticAction::identity(n)),
                });
                match expected {
                    Ok(t) => report.push(
                        format!("vanishing[{j}]"),
                        t == action,
                        if t == action { String::new() } else { format!("lift {action} differs from transvection {t}") },
                    ),
                    Err(e) => report.push(format!("vanishing[{j}]"), false, e.to_string()),
                }
            } else {
                let trivial = action.is_identity();
                report.push(
                    format!("kernel[{j}]"),
                    trivial,
                    if trivial { String::new() } else { format!("degree {} factor lifts to {action}", factor.degree) },
                );
            }
            product = product.and_then(|p| p.compose(&action).ok());
        }
        let twist = BraidWord::full_twist(self.branch_points).and_then(|b| self.lift_action(&b));
        match (product, twist) {
            (Some(p), Ok(t)) => {
                let ok = p == t;
                report.push("product", ok, if ok { String::new() } else { format!("product of lifts {p}, lift of Δ² {t}") });
            }
            (None, _) => report.push("product", false, "some factor does not lift"),
            (_, Err(e)) => report.push("product", false, e.to_string()),
        }
        report
    }
}

/// Builds the cover model of a valid simple-cover representation.
pub fn build_cover(theta: &MonodromyRep) -> Result<CoverModel> {
    let report = theta.validate_rep();
    if !report.pass {
        let reasons: Vec<String> = report.failures().map(|c| format!("{}: {}", c.name, c.detail)).collect();
        return Err(Error::InvalidRep(reasons.join("; ")));
    }
    let n = theta.sheets();
    let d = theta.generator_count();
    let twice_genus = 2 + d as i64 - 2 * n as i64;
    if twice_genus < 0 || twice_genus % 2 != 0 {
        return Err(Error::InvalidCover(format!("genus 1 - n + d/2 = 1 - {n} + {d}/2 is not a non-negative integer")));
    }
    let genus = (twice_genus / 2) as usize;

    // vertices: sheets over the base point, then preimages of each branch point
    let mut targets = vec![0usize; n * d];
    let mut vertex_count = n;
    for (i, p) in theta.images().iter().enumerate() {
        for cycle in p.cycles() {
            for &t in &cycle {
                targets[i * n + t] = vertex_count;
            }
            vertex_count += 1;
        }
    }
    let edges = n * d;
    let euler = vertex_count as i64 - edges as i64;
    if euler != n as i64 - d as i64 {
        return Err(Error::InvalidCover(format!("spine Euler characteristic {euler}, expected {}", n as i64 - d as i64)));
    }

    // incidence and cyclic order of half-edges around each vertex
    let mut around: Vec<Vec<(usize, End)>> = vec![Vec::new(); vertex_count];
    for t in 0..n {
        for i in 0..d {
            around[t].push((i * n + t, End::Source));
        }
        if !ARCS_COUNTERCLOCKWISE {
            around[t].reverse();
        }
    }
    for (e, &w) in targets.iter().enumerate() {
        around[w].push((e, End::Target));
    }
    let mut position = vec![[0usize; 2]; edges];
    for list in &around {
        for (k, &(e, end)) in list.iter().enumerate() {
            position[e][end as usize] = k;
        }
    }

    // breadth-first spanning tree from the first sheet
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; vertex_count];
    let mut depth = vec![usize::MAX; vertex_count];
    let mut in_tree = vec![false; edges];
    depth[0] = 0;
    let mut queue = std::collections::VecDeque::from([0usize]);
    while let Some(v) = queue.pop_front() {
        for &(e, end) in &around_by_index(&around[v]) {
            let other = if end == End::Source { targets[e] } else { e % n };
            if depth[other] == usize::MAX {
                depth[other] = depth[v] + 1;
                parent[other] = Some((v, e));
                in_tree[e] = true;
                queue.push_back(other);
            }
        }
    }
    if depth.contains(&usize::MAX) {
        return Err(Error::InvalidCover("spine is disconnected".into()));
    }
    let cotree: Vec<usize> = (0..edges).filter(|&e| !in_tree[e]).collect();
    let m = cotree.len();
    if m != 2 * genus + n - 1 {
        return Err(Error::InvalidCover(format!("cycle rank {m}, expected {}", 2 * genus + n - 1)));
    }

    let walks: Vec<Walk> = cotree.iter().map(|&e| fundamental_walk(e, n, &targets, &parent, &depth)).collect();
    let cycles: Vec<Vec<i64>> = walks
        .iter()
        .map(|w| {
            let mut c = vec![0i64; edges];
            for &(e, s) in w {
                c[e] += i64::from(s);
            }
            c
        })
        .collect();
    let ribbon = Ribbon { n, targets: &targets, position: &position, degree: around.iter().map(Vec::len).collect() };
    let cycle_form: Matrix =
        walks.iter().map(|a| walks.iter().map(|b| ribbon.intersection(a, b)).collect()).collect();
    if !lattice::is_skew(&cycle_form) {
        return Err(Error::InvalidCover("ribbon intersection numbers are not skew-symmetric".into()));
    }
    let faces = ribbon.face_count(&around);
    if faces != n {
        return Err(Error::InvalidCover(format!("ribbon surface has {faces} boundary components, expected {n}")));
    }

    let mut model = CoverModel {
        theta: theta.clone(),
        sheets: n,
        branch_points: d,
        genus,
        boundary_count: theta.boundary_image().cycle_count(),
        vertex_count,
        targets,
        cotree,
        cycles,
        cycle_form,
        projection: Vec::new(),
        basis: Vec::new(),
        form: Vec::new(),
    };

    // quotient by the boundary loops, which lie in the radical of the form
    let boundary_word = FreeWord::boundary(d);
    let boundary: Matrix = (0..n)
        .map(|s| {
            let (c, _) = model.lift_chain(&boundary_word, theta, s)?;
            Ok(model.cotree.iter().map(|&e| c[e]).collect())
        })
        .collect::<Result<_>>()?;
    let (rank, v, v_inv) = lattice::column_reduce(&boundary, m)?;
    if rank != n - 1 || crate::snf::invariant_factors_i64(&boundary).iter().any(|x| !crate::snf::is_unit(x)) {
        return Err(Error::InvalidCover("boundary loops do not span a primitive rank n-1 sublattice".into()));
    }
    let lifts: Matrix = v_inv[rank..].to_vec();
    let quotient_form = lattice::mul(&lattice::mul(&lifts, &model.cycle_form)?, &lattice::transpose(&lifts))?;
    let p = lattice::symplectic_basis(&quotient_form)?;
    let std = lattice::standard_form(2 * genus);
    // P⁻¹ = G Pᵀ J⁻¹ and J⁻¹ = −J
    let neg_std: Matrix = std.iter().map(|r| r.iter().map(|x| -x).collect()).collect();
    let p_inv = lattice::mul(&lattice::mul(&quotient_form, &lattice::transpose(&p))?, &neg_std)?;
    let v_tail: Matrix = v.iter().map(|row| row[rank..].to_vec()).collect();
    model.projection = lattice::mul(&v_tail, &p_inv)?;
    let basis_z = lattice::mul(&p, &lifts)?;
    model.basis = lattice::mul(&basis_z, &model.cycles)?;
    model.form = lattice::mul(&lattice::mul(&p, &quotient_form)?, &lattice::transpose(&p))?;
    if model.form != std {
        return Err(Error::InvalidCover("symplectic normalization failed".into()));
    }
    Ok(model)
}

fn around_by_index(list: &[(usize, End)]) -> Vec<(usize, End)> {
    let mut sorted = list.to_vec();
    sorted.sort_by_key(|&(e, _)| e);
    sorted
}

fn fundamental_walk(
    e: usize,
    n: usize,
    targets: &[usize],
    parent: &[Option<(usize, usize)>],
    depth: &[usize],
) -> Walk {
    let (u, w) = (e % n, targets[e]);
    // walk u -e-> w, then along the tree from w back to u
    let mut up_from_w = Vec::new();
    let mut down_to_u = Vec::new();
    let (mut a, mut b) = (w, u);
    while a != b {
        if depth[a] >= depth[b] {
            let (p, edge) = parent[a].expect("non-root");
            up_from_w.push((edge, if a == edge % n { 1 } else { -1 }));
            a = p;
        } else {
            let (p, edge) = parent[b].expect("non-root");
            // traversed from p to b
            down_to_u.push((edge, if b == edge % n { -1 } else { 1 }));
            b = p;
        }
    }
    let mut walk = vec![(e, 1i8)];
    walk.extend(up_from_w);
    walk.extend(down_to_u.into_iter().rev());
    walk
}

struct Ribbon<'a> {
    n: usize,
    targets: &'a [usize],
    position: &'a [[usize; 2]],
    degree: Vec<usize>,
}

impl Ribbon<'_> {
    fn vertex(&self, e: usize, end: End) -> usize {
        match end {
            End::Source => e % self.n,
            End::Target => self.targets[e],
        }
    }

    /// Vertex visits of a closed walk: (vertex, arriving half-edge, leaving
    /// half-edge).
    fn visits(&self, walk: &Walk) -> Vec<(usize, (usize, End), (usize, End))> {
        (0..walk.len())
            .map(|k| {
                let (e_in, s_in) = walk[k];
                let (e_out, s_out) = walk[(k + 1) % walk.len()];
                let arrive = if s_in > 0 { End::Target } else { End::Source };
                let leave = if s_out > 0 { End::Source } else { End::Target };
                (self.vertex(e_in, arrive), (e_in, arrive), (e_out, leave))
            })
            .collect()
    }

    /// Signed crossings of `a` with a copy of `b` pushed off to one side of
    /// every edge, counted inside small disks around the vertices.
    fn intersection(&self, a: &Walk, b: &Walk) -> i64 {
        let va = self.visits(a);
        let vb = self.visits(b);
        let mut total = 0i64;
        for &(v, x1, x2) in &va {
            let size = 4 * self.degree[v] as i64;
            let at = |(e, end): (usize, End)| 4 * self.position[e][end as usize] as i64;
            let shifted = |(e, end): (usize, End)| {
                let off = if end == End::Source { 1 } else { -1 };
                (at((e, end)) + off).rem_euclid(size)
            };
            let (p1, p2) = (at(x1), at(x2));
            let span = (p2 - p1).rem_euclid(size);
            let inside = |y: i64| (y - p1).rem_euclid(size) < span;
            for &(w, y1, y2) in &vb {
                if w != v {
                    continue;
                }
                total += i64::from(inside(shifted(y2))) - i64::from(inside(shifted(y1)));
            }
        }
        total
    }

    /// Boundary components of the thickened spine.
    fn face_count(&self, around: &[Vec<(usize, End)>]) -> usize {
        let darts = 2 * self.targets.len();
        let index = |(e, end): (usize, End)| 2 * e + end as usize;
        let mut seen = vec![false; darts];
        let mut faces = 0;
        for start in 0..darts {
            if seen[start] {
                continue;
            }
            faces += 1;
            let mut dart = start;
            while !seen[dart] {
                seen[dart] = true;
                let (e, end) = (dart / 2, if dart % 2 == 0 { End::Source } else { End::Target });
                let opposite = if end == End::Source { End::Target } else { End::Source };
                let v = self.vertex(e, opposite);
                let k = self.position[e][opposite as usize];
                let next = around[v][(k + 1) % around[v].len()];
                dart = index(next);
            }
        }
        faces
    }
}

/// Integer matrix acting on row vectors of homology coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SymplecticAction {
    pub matrix: Matrix,
}

impl SymplecticAction {
    pub fn identity(dim: usize) -> Self {
        SymplecticAction { matrix: lattice::identity(dim) }
    }

    pub fn dim(&self) -> usize {
        self.matrix.len()
    }

    /// `self` then `other`.
    pub fn compose(&self, other: &SymplecticAction) -> Result<SymplecticAction> {
        Ok(SymplecticAction { matrix: lattice::mul(&self.matrix, &other.matrix)? })
    }

    pub fn is_identity(&self) -> bool {
        self.matrix == lattice::identity(self.dim())
    }

    /// `M J Mᵀ = J`, equivalently `Mᵀ J M = J`.
    pub fn preserves(&self, form: &Matrix) -> bool {
        let m = &self.matrix;
        let mt = lattice::transpose(m);
        let a = lattice::mul(m, form).and_then(|x| lattice::mul(&x, &mt));
        let b = lattice::mul(&mt, form).and_then(|x| lattice::mul(&x, m));
        matches!((a, b), (Ok(a), Ok(b)) if &a == form && &b == form)
    }

    /// Inverse of a matrix preserving `form`: `J Mᵀ J⁻¹`.
    pub fn inverse(&self, form: &Matrix) -> Result<SymplecticAction> {
        let neg: Matrix = form.iter().map(|r| r.iter().map(|x| -x).collect()).collect();
        let m = lattice::mul(&lattice::mul(form, &lattice::transpose(&self.matrix))?, &neg)?;
        Ok(SymplecticAction { matrix: m })
    }
}

impl fmt::Display for SymplecticAction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .matrix
            .iter()
            .map(|r| format!("[{}]", r.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")))
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}
