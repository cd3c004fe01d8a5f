//! End-to-end acceptance run: one PASS/FAIL line per criterion.
//!
//! Criteria listed in `KNOWN_RED` cannot pass against the printed reference
//! data; they are still evaluated and reported as FAIL, but do not abort the
//! run. A known-red criterion that starts passing does abort it, so the list
//! cannot go stale.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use dirac_yukawa::limits::{
    centrifugal_augmented_energy, coulomb_pseudospin_closed_form, coulomb_spin_closed_form,
    dirac_coulomb_pseudospin, dirac_coulomb_spin, nonrel_energy, CentrifugalAugmentedParams,
    NonRelParams, RootOutcome, FIXED_POINT_TOL,
};
use dirac_yukawa::oracle::{shoot_eigenvalue, Potential, RadialProblem, DEFAULT_STEP};
use dirac_yukawa::pseudospin_spectrum::{map_from_spin, pseudospin_energy_pair, pseudospin_wavefunction};
use dirac_yukawa::quadrature::square_norm;
use dirac_yukawa::spin_spectrum::{spin_energy_pair, spin_wavefunction};
use dirac_yukawa::{Branch, EnergyPair, PhysicalParams, Root, RootClass, StateIndex};
use dirac_yukawa_cli::golden::{Golden, RootSign};
use dirac_yukawa_cli::tables::{
    self, dirac_table, table4_params, table5_params, DiracRow, MINUS_WINDOW, PLUS_GAP,
};

/// Printed Table 4 carries five E⁻ values with the wrong sign.
const KNOWN_RED: &[u32] = &[3];

type Check = Result<String, String>;
type Criterion = (u32, &'static str, fn() -> Check);
type WaveFn = fn(&PhysicalParams, StateIndex, f64) -> dirac_yukawa::Result<dirac_yukawa::radial::Spinor>;

fn st(n: u32, kappa: i32) -> StateIndex {
    StateIndex::new(n, kappa).unwrap()
}

fn within_time(detail: String, elapsed: Duration, limit: f64) -> Check {
    if elapsed.as_secs_f64() < limit {
        Ok(detail)
    } else {
        Err(format!("{detail}; took {:.2} s, limit {limit} s", elapsed.as_secs_f64()))
    }
}

fn ac1() -> Check {
    let t = Instant::now();
    let golden = Golden::embedded();
    let rows = tables::table3(1.0, std::f64::consts::SQRT_2, &golden.table3, None).map_err(|e| e.to_string())?;
    let max = rows
        .iter()
        .map(|r| (r.level.energy - r.reference.0).abs())
        .fold(0.0, f64::max);
    let detail = format!("{} entries, max |diff| = {max:.2e}", rows.len());
    if max > 1e-6 {
        return Err(detail);
    }
    within_time(detail, t.elapsed(), 1.0)
}

fn ac2() -> Check {
    let t = Instant::now();
    let golden = Golden::embedded();
    let rows = tables::table3(1.0, std::f64::consts::SQRT_2, &golden.table3, Some(DEFAULT_STEP))
        .map_err(|e| e.to_string())?;
    let mut max = 0.0f64;
    for r in &rows {
        let o = r.oracle.ok_or("oracle column missing")?;
        if !o.converged {
            return Err(format!("{} g={} did not converge", r.state, r.g));
        }
        max = max.max((o.energy - r.reference.1).abs());
    }
    let detail = format!("{} entries, max |diff| = {max:.2e}", rows.len());
    if max > 5e-4 {
        return Err(detail);
    }
    within_time(detail, t.elapsed(), 30.0)
}

fn not_bound(pair: &EnergyPair) -> bool {
    pair.roots().iter().all(|r| r.class != RootClass::ValidBound)
}

/// Shared contract of the two Dirac tables.
fn dirac_contract(rows: &[DiracRow], undefined_shell: impl Fn(StateIndex) -> bool) -> Check {
    let mut max = 0.0f64;
    let mut bad = Vec::new();
    let mut dashes = 0;
    for r in rows {
        match r.reference {
            Some((minus, plus)) => {
                for (root, want, name) in [(r.pair.minus, minus, "E-"), (r.pair.plus, plus, "E+")] {
                    let Some(e) = root.energy else {
                        bad.push(format!("{} {name}: no root, printed {want}", r.state));
                        continue;
                    };
                    let d = (e - want).abs();
                    max = max.max(d);
                    if d > 1e-5 {
                        bad.push(format!("{} {name}: {e:.7} vs printed {want}", r.state));
                    }
                }
            }
            None => {
                dashes += 1;
                let undefined = undefined_shell(r.state)
                    && r.pair.roots().iter().all(|x| x.class == RootClass::Undefined);
                if !undefined && !not_bound(&r.pair) {
                    bad.push(format!("{} printed '-' but has a bound root", r.state));
                }
            }
        }
    }
    let numeric = rows.len() - dashes;
    if bad.is_empty() {
        Ok(format!("{numeric} pairs, max |diff| = {max:.2e}, {dashes} '-' cells non-bound"))
    } else {
        Err(format!("{} of {} values off: {}", bad.len(), 2 * numeric, bad.join("; ")))
    }
}

fn ac3() -> Check {
    let t = Instant::now();
    let rows = dirac_table(Branch::Spin, &table4_params(), &Golden::embedded().table4).map_err(|e| e.to_string())?;
    let outcome = dirac_contract(&rows, |s| s.kappa() == -(s.n() as i32 + 1));
    let sign_flips = rows
        .iter()
        .filter_map(|r| Some((r.pair.minus.energy?, r.reference?.0)))
        .filter(|&(e, want)| (e - want).abs() > 1e-5 && (e + want).abs() <= 1e-5)
        .count();
    match outcome {
        Ok(d) => within_time(d, t.elapsed(), 1.0),
        Err(d) => Err(format!("{d} [{sign_flips} match the printed magnitude with opposite sign]")),
    }
}

fn ac4() -> Check {
    let t = Instant::now();
    let p = table5_params();
    let rows = dirac_table(Branch::Pseudospin, &p, &Golden::embedded().table5).map_err(|e| e.to_string())?;
    let detail = dirac_contract(&rows, |s| s.pseudospin_shell() == 0)?;
    for l_tilde in 2..=25 {
        let pair = pseudospin_energy_pair(&p, st(1, -l_tilde)).unwrap();
        if not_bound(&pair) {
            return Err(format!("n=1, l~={l_tilde} is not bound"));
        }
    }
    let edge = pseudospin_energy_pair(&p, st(1, -26)).unwrap();
    if !not_bound(&edge) {
        return Err("n=1, l~=26 still bound".into());
    }
    within_time(format!("{detail}; n=1 bound for l~ <= 25, unbound at 26"), t.elapsed(), 2.0)
}

fn ac5() -> Check {
    let golden = Golden::embedded();
    let rows = tables::table2(&tables::table2_params(), &golden.table2).map_err(|e| e.to_string())?;
    let mut max = 0.0f64;
    let mut compared = 0;
    let mut bad = Vec::new();
    for r in rows.iter().filter(|r| !r.isolated()) {
        match (r.computed.energy, r.reference) {
            (Some(e), Some(want)) => {
                compared += 1;
                max = max.max((e - want).abs());
                if (e - want).abs() > 1.5e-3 {
                    bad.push(format!("Cs={} kappa={} {}: {e:.4} vs {want}", r.cs, r.kappa, r.root.as_str()));
                }
            }
            (None, Some(want)) => bad.push(format!("Cs={} kappa={}: no root, printed {want}", r.cs, r.kappa)),
            (Some(e), None) => bad.push(format!("Cs={} kappa={}: printed '-', computed {e:.4}", r.cs, r.kappa)),
            (None, None) => {}
        }
    }
    // no-root sets per (root, kappa) against the stated intervals
    let mut gaps: BTreeMap<(&str, i32), Vec<f64>> = BTreeMap::new();
    for r in &rows {
        if r.computed.energy.is_none() {
            gaps.entry((r.root.as_str(), r.kappa)).or_default().push(r.cs);
        }
    }
    let regions = [(RootSign::Plus, PLUS_GAP, [1, 3, 5]), (RootSign::Minus, MINUS_WINDOW, [1, 1, 1])];
    for (root, (lo, hi), kappas) in regions {
        for kappa in kappas {
            let gap = gaps.get(&(root.as_str(), kappa)).cloned().unwrap_or_default();
            if gap.is_empty() || gap.iter().any(|&c| c < lo || c > hi) {
                bad.push(format!("{} kappa={kappa}: no-root C_s {gap:?} not a subset of [{lo}, {hi}]", root.as_str()));
            }
        }
    }
    let isolated = rows.iter().filter(|r| r.isolated()).count();
    let detail = format!(
        "{compared} cells, max |diff| = {max:.2e}; {isolated} isolated cells inside the gap/window not compared"
    );
    if bad.is_empty() {
        Ok(detail)
    } else {
        Err(format!("{detail}; {}", bad.join("; ")))
    }
}

fn grid() -> impl Iterator<Item = StateIndex> {
    (0..=4u32).flat_map(|n| (-6..=6).filter(|&k| k != 0).map(move |k| st(n, k)))
}

fn same_energy(a: Root, b: Root, tol: f64) -> bool {
    match (a.energy, b.energy) {
        (Some(x), Some(y)) => (x - y).abs() <= tol,
        (x, y) => x == y,
    }
}

fn same_pair(a: &EnergyPair, b: &EnergyPair, tol: f64) -> bool {
    same_energy(a.plus, b.plus, tol) && same_energy(a.minus, b.minus, tol)
}

fn ac6() -> Check {
    let mut groups = 0;
    for (branch, p) in [(Branch::Spin, table4_params()), (Branch::Pseudospin, table5_params())] {
        let mut by_shell: BTreeMap<i64, Vec<(StateIndex, EnergyPair)>> = BTreeMap::new();
        for s in grid() {
            let (shell, pair) = match branch {
                Branch::Spin => (s.spin_shell(), spin_energy_pair(&p, s)),
                Branch::Pseudospin => (s.pseudospin_shell(), pseudospin_energy_pair(&p, s)),
            };
            by_shell.entry(shell.abs()).or_default().push((s, pair.unwrap()));
        }
        for (shell, members) in &by_shell {
            let (s0, first) = &members[0];
            if let Some((s, _)) = members.iter().find(|(_, pair)| !same_pair(first, pair, 1e-12)) {
                return Err(format!("{branch} |shell|={shell}: {s} differs from {s0}"));
            }
            groups += 1;
        }
    }
    Ok(format!("{groups} shells over n <= 4, |kappa| <= 6, both branches"))
}

fn ac7() -> Check {
    let p = table5_params();
    let mut count = 0;
    for s in grid() {
        let (mapped, direct) = (map_from_spin(&p, s), pseudospin_energy_pair(&p, s).unwrap());
        let classes = mapped.plus.class == direct.plus.class && mapped.minus.class == direct.minus.class;
        if !same_pair(&mapped, &direct, 1e-12) || !classes {
            return Err(format!("{s}: mapped {mapped:?} vs direct {direct:?}"));
        }
        count += 1;
    }
    Ok(format!("{count} states agree in energy and class"))
}

fn ac8() -> Check {
    let coupling = std::f64::consts::SQRT_2;
    let mut max = 0.0f64;
    let refs = &Golden::embedded().table3;
    for r in refs {
        let alpha = r.g * coupling;
        let closed = nonrel_energy(&NonRelParams::new(1.0, coupling, alpha, r.n, r.l).unwrap()).energy;
        let problem = RadialProblem::new(
            1.0,
            r.l,
            Potential::ApproxYukawa {
                coupling,
                screening: alpha,
            },
        )
        .unwrap();
        let shot = shoot_eigenvalue(&problem, r.n).map_err(|e| format!("{} g={}: {e}", r.state, r.g))?;
        max = max.max((shot.energy - closed).abs());
    }
    let detail = format!("{} states, max |diff| = {max:.2e}", refs.len());
    if max <= 1e-7 {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn admissible(pair: &EnergyPair) -> Option<f64> {
    let roots = pair.roots();
    roots
        .iter()
        .find(|r| r.class.is_valid())
        .or_else(|| roots.iter().find(|r| r.class.admits_wavefunction()))
        .and_then(|r| r.energy)
}

fn ac9() -> Check {
    let states = [(0, 1), (1, 1), (2, 1), (0, 2), (1, 2), (0, 3), (1, -1)];
    let mut worst = 0.0f64;
    let mut counts = [0; 2];
    for (i, (branch, p)) in [(Branch::Spin, table4_params()), (Branch::Pseudospin, table5_params())]
        .into_iter()
        .enumerate()
    {
        for &(n, kappa) in &states {
            let s = st(n, kappa);
            let (pair, wave): (EnergyPair, WaveFn) = match branch {
                Branch::Spin => (spin_energy_pair(&p, s).unwrap(), spin_wavefunction),
                Branch::Pseudospin => (pseudospin_energy_pair(&p, s).unwrap(), pseudospin_wavefunction),
            };
            let Some(e) = admissible(&pair) else { continue };
            let Ok(psi) = wave(&p, s, e) else { continue };
            let norm = match branch {
                Branch::Spin => square_norm(|r| psi.upper(r), psi.extent()),
                Branch::Pseudospin => square_norm(|r| psi.lower(r), psi.extent()),
            }
            .map_err(|e| e.to_string())?;
            worst = worst.max((norm - 1.0).abs());
            counts[i] += 1;
        }
    }
    let detail = format!("{} spin, {} pseudospin states, max |norm - 1| = {worst:.2e}", counts[0], counts[1]);
    if counts.iter().all(|&c| c >= 6) && worst <= 1e-8 {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn ac10() -> Check {
    let mut max_screened = 0.0f64;
    for (branch, c) in [(Branch::Spin, 4.9), (Branch::Pseudospin, -5.0)] {
        let p = PhysicalParams::new(5.0, 1.0, 1e-6, c).unwrap();
        for s in grid() {
            let (screened, coulomb) = match branch {
                Branch::Spin => (spin_energy_pair(&p, s).unwrap(), dirac_coulomb_spin(&p, s)),
                Branch::Pseudospin => (pseudospin_energy_pair(&p, s).unwrap(), dirac_coulomb_pseudospin(&p, s)),
            };
            for (a, b) in screened.roots().iter().zip(coulomb.roots()) {
                match (a.energy, b.energy) {
                    (Some(x), Some(y)) => max_screened = max_screened.max((x - y).abs()),
                    (None, None) => {}
                    _ => return Err(format!("{branch} {s}: root present in one limit only")),
                }
            }
        }
    }
    if max_screened > 1e-5 {
        return Err(format!("alpha=1e-6 vs Coulomb: max |diff| = {max_screened:.2e}"));
    }
    let p = PhysicalParams::new(5.0, 1.0, 0.1, 0.0).unwrap();
    let mut max_closed = 0.0f64;
    let mut checked = 0;
    for s in grid() {
        for (closed, pair) in [
            (coulomb_spin_closed_form(5.0, 1.0, s), dirac_coulomb_spin(&p, s)),
            (coulomb_pseudospin_closed_form(5.0, 1.0, s), dirac_coulomb_pseudospin(&p, s)),
        ] {
            let Some(want) = closed else { continue };
            let d = pair
                .roots()
                .iter()
                .filter_map(|r| r.energy)
                .map(|e| (e - want).abs())
                .fold(f64::INFINITY, f64::min);
            max_closed = max_closed.max(d);
            checked += 1;
        }
    }
    let detail = format!(
        "alpha=1e-6 max |diff| = {max_screened:.2e}; C=0 closed forms ({checked} states) max |diff| = {max_closed:.2e}"
    );
    if max_closed <= 1e-12 {
        Ok(detail)
    } else {
        Err(detail)
    }
}

/// Relative residual of the back-substitution condition, recomputed here.
fn relative_residual(branch: Branch, p: &PhysicalParams, s: StateIndex, e: f64) -> f64 {
    let (m, a, alpha, c) = (p.mass(), p.coupling(), p.screening(), p.symmetry_constant());
    let (f1, f2, k, rhs) = match branch {
        Branch::Spin => {
            let k = s.spin_shell() as f64;
            (m - e, m + e - c, k, (m + e - c) * a / (2.0 * k))
        }
        Branch::Pseudospin => {
            let k = s.pseudospin_shell() as f64;
            (m + e, m - e + c, k, -(m - e + c) * a / (2.0 * k))
        }
    };
    ((f1 * f2).sqrt() + alpha * k - rhs).abs() / rhs.abs().max(1.0)
}

fn ac11() -> Check {
    let golden = Golden::embedded();
    let mut cases: Vec<(Branch, PhysicalParams, StateIndex, Root)> = Vec::new();
    for r in tables::table2(&tables::table2_params(), &golden.table2).map_err(|e| e.to_string())? {
        let p = tables::table2_params().with_symmetry_constant(r.cs).unwrap();
        cases.push((Branch::Spin, p, st(0, r.kappa), r.computed));
    }
    for (branch, p, refs) in [
        (Branch::Spin, table4_params(), &golden.table4),
        (Branch::Pseudospin, table5_params(), &golden.table5),
    ] {
        for r in dirac_table(branch, &p, refs).map_err(|e| e.to_string())? {
            cases.extend(r.pair.roots().map(|root| (branch, p, r.state, root)));
        }
    }
    let mut worst = 0.0f64;
    let mut valid = 0;
    for (branch, p, s, root) in cases.iter().filter(|c| c.3.class == RootClass::ValidBound) {
        worst = worst.max(relative_residual(*branch, p, *s, root.energy.unwrap()));
        valid += 1;
    }
    let detail = format!("{valid} valid roots of {} checked, max relative residual = {worst:.2e}", cases.len());
    if valid > 0 && worst <= 1e-9 {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn ac12() -> Check {
    let mut reduced = 0;
    for (branch, base) in [(Branch::Spin, table4_params()), (Branch::Pseudospin, table5_params())] {
        let p = CentrifugalAugmentedParams::new(base, 0.0, branch).unwrap();
        for s in grid() {
            let pair = match branch {
                Branch::Spin => spin_energy_pair(&base, s).unwrap(),
                Branch::Pseudospin => pseudospin_energy_pair(&base, s).unwrap(),
            };
            let sol = centrifugal_augmented_energy(&p, s);
            for (out, want) in [(&sol.plus, pair.plus), (&sol.minus, pair.minus)] {
                let ok = match out {
                    RootOutcome::Solved(fp) => want.energy.is_some_and(|e| (fp.energy - e).abs() <= 1e-12),
                    RootOutcome::Absent(class) => *class == want.class,
                    RootOutcome::Failed(_) => false,
                };
                if !ok {
                    return Err(format!("{branch} {s}: D=0 gives {out:?}, base {want:?}"));
                }
                reduced += 1;
            }
        }
    }
    let p = CentrifugalAugmentedParams::new(table4_params(), 0.1, Branch::Spin).unwrap();
    let (a, b) = (centrifugal_augmented_energy(&p, st(0, -2)), centrifugal_augmented_energy(&p, st(1, -1)));
    let (a, b) = match (a.plus.solved(), b.plus.solved()) {
        (Some(a), Some(b)) => (*a, *b),
        _ => return Err("D=0.1 doublet E+ not solved".into()),
    };
    let split = (a.energy - b.energy).abs();
    let detail = format!(
        "{reduced} roots reduce at D=0; D=0.1 split = {split:.3e}, kappa residuals {:.1e}/{:.1e}",
        a.kappa_residual, b.kappa_residual
    );
    let converged = a.converged && b.converged && a.kappa_residual.max(b.kappa_residual) <= FIXED_POINT_TOL;
    if split > 1e-6 && converged {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        (1, "Table 3 closed form", ac1),
        (2, "Table 3 shooting oracle", ac2),
        (3, "Table 4 spin spectrum", ac3),
        (4, "Table 5 pseudospin spectrum", ac4),
        (5, "Table 2 symmetry-constant scan", ac5),
        (6, "shell degeneracy", ac6),
        (7, "spin-to-pseudospin mapping", ac7),
        (8, "approximated Hamiltonian oracle", ac8),
        (9, "normalization", ac9),
        (10, "Coulomb limits", ac10),
        (11, "back-substitution residuals", ac11),
        (12, "centrifugal-augmented solver", ac12),
    ];
    let mut unexpected = 0;
    for (id, title, check) in criteria {
        let t = Instant::now();
        let outcome = check();
        let secs = t.elapsed().as_secs_f64();
        let known = KNOWN_RED.contains(&id);
        let (tag, detail) = match &outcome {
            Ok(d) => ("PASS", d),
            Err(d) => ("FAIL", d),
        };
        let note = if known { " (known: printed reference disagrees)" } else { "" };
        println!("AC{id:<2} {tag} [{secs:6.2} s] {title}{note}: {detail}");
        if outcome.is_ok() == known {
            unexpected += 1;
        }
    }
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{unexpected} criteria with unexpected outcome");
        ExitCode::FAILURE
    }
}
