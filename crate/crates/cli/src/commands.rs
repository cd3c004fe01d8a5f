//! Subcommand implementations; each returns a [`Dataset`].

use rayon::prelude::*;
use serde_json::json;

use dirac_yukawa::limits::{
    centrifugal_augmented_energy, centrifugal_residual, dirac_coulomb_pseudospin,
    dirac_coulomb_spin, nonrel_energy, CentrifugalAugmentedParams, NonRelParams, RootOutcome,
};
use dirac_yukawa::oracle::{quadrature_norm, shoot_eigenvalue, Potential, RadialProblem};
use dirac_yukawa::pseudospin_spectrum::pseudospin_wavefunction;
use dirac_yukawa::radial::log_grid;
use dirac_yukawa::spin_spectrum::spin_wavefunction;
use dirac_yukawa::{Branch, EnergyPair, PhysicalParams, Root, StateIndex};

use crate::args::{
    BranchArg, Cli, Command, OracleArgs, PhysArgs, PotentialArg, RootArg, SpectrumArgs, SweepArgs,
    SweepParam, TableArgs, TableId, WavefunctionArgs,
};
use crate::error::{CliError, CliResult};
use crate::golden::{Golden, RootSign};
use crate::output::{Dataset, Value};
use crate::tables::{self, residual};

/// A dataset plus an optional human-readable summary for stderr.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub dataset: Dataset,
    pub summary: Option<String>,
}

impl From<Dataset> for Report {
    fn from(dataset: Dataset) -> Self {
        Report {
            dataset,
            summary: None,
        }
    }
}

pub fn run(cli: &Cli) -> CliResult<Report> {
    match &cli.command {
        Command::Table(a) => run_table(a),
        Command::Spectrum(a) => run_spectrum(a).map(Into::into),
        Command::Sweep(a) => run_sweep(a).map(Into::into),
        Command::Wavefunction(a) => run_wavefunction(a).map(Into::into),
        Command::Oracle(a) => run_oracle(a).map(Into::into),
    }
}

fn branch_name(b: Branch) -> &'static str {
    match b {
        Branch::Spin => "spin",
        Branch::Pseudospin => "pseudospin",
    }
}

fn resolve(phys: &PhysArgs) -> CliResult<(Branch, PhysicalParams)> {
    let requested = phys.branch.map(|b| match b {
        BranchArg::Spin => Branch::Spin,
        BranchArg::Pseudospin => Branch::Pseudospin,
    });
    let (branch, c) = match (phys.cs, phys.cps) {
        (Some(c), _) => (Branch::Spin, c),
        (_, Some(c)) => (Branch::Pseudospin, c),
        _ => (requested.unwrap_or(Branch::Spin), 0.0),
    };
    if requested.is_some_and(|r| r != branch) {
        return Err(CliError::Invalid(format!(
            "--branch {} contradicts the symmetry constant given",
            branch_name(requested.unwrap())
        )));
    }
    let p = PhysicalParams::new(phys.mass, phys.coupling, phys.alpha, c)?;
    Ok((branch, p))
}

fn params_json(branch: Branch, p: &PhysicalParams) -> serde_json::Value {
    let c = match branch {
        Branch::Spin => "Cs",
        Branch::Pseudospin => "Cps",
    };
    json!({
        "branch": branch_name(branch),
        "M": p.mass(),
        "A": p.coupling(),
        "alpha": p.screening(),
        c: p.symmetry_constant(),
    })
}

/// Screened solver, or the Coulomb limit at `α = 0`.
fn solve_pair(branch: Branch, p: &PhysicalParams, s: StateIndex) -> CliResult<EnergyPair> {
    if p.screening() == 0.0 {
        return Ok(match branch {
            Branch::Spin => dirac_coulomb_spin(p, s),
            Branch::Pseudospin => dirac_coulomb_pseudospin(p, s),
        });
    }
    Ok(tables::energy_pair(branch, p, s)?)
}

fn abs_diff(a: Option<f64>, b: Option<f64>) -> Option<f64> {
    Some((a? - b?).abs())
}

#[derive(Default)]
struct DiffStats {
    compared: usize,
    max: f64,
    presence_mismatch: usize,
}

impl DiffStats {
    fn add(&mut self, ours: Option<f64>, reference: Option<f64>) {
        match (ours, reference) {
            (Some(a), Some(b)) => {
                self.compared += 1;
                self.max = self.max.max((a - b).abs());
            }
            (None, Some(_)) => self.presence_mismatch += 1,
            _ => {}
        }
    }

    fn summary(&self, what: &str) -> String {
        format!(
            "{what}: {} cells compared, max |computed - printed| = {:e}, {} printed values without a computed root",
            self.compared, self.max, self.presence_mismatch
        )
    }
}

fn run_table(a: &TableArgs) -> CliResult<Report> {
    let golden = Golden::embedded();
    match a.id {
        TableId::Two => {
            let d = tables::table2_params();
            let base = PhysicalParams::new(
                a.mass.unwrap_or(d.mass()),
                a.coupling.unwrap_or(d.coupling()),
                a.alpha.unwrap_or(d.screening()),
                0.0,
            )?;
            let rows = tables::table2(&base, &golden.table2)?;
            let mut cols = vec!["Cs", "kappa", "root", "energy", "class", "residual"];
            if a.diff {
                cols.extend(["printed", "abs_diff", "note"]);
            }
            let mut ds = Dataset::new("table 2", cols).param(
                "params",
                json!({"M": base.mass(), "A": base.coupling(), "alpha": base.screening(), "n": 0}),
            );
            let mut stats = DiffStats::default();
            for r in &rows {
                let mut row: Vec<Value> = vec![
                    r.cs.into(),
                    r.kappa.into(),
                    r.root.as_str().into(),
                    r.computed.energy.into(),
                    r.computed.class.token().into(),
                    r.residual.into(),
                ];
                if a.diff {
                    row.push(r.reference.into());
                    row.push(abs_diff(r.computed.energy, r.reference).into());
                    row.push(if r.isolated() { "isolated".into() } else { Value::Null });
                    if !r.isolated() {
                        stats.add(r.computed.energy, r.reference);
                    }
                }
                ds.push(row);
            }
            Ok(Report {
                dataset: ds,
                summary: a.diff.then(|| {
                    let isolated = rows.iter().filter(|r| r.isolated()).count();
                    format!("{} ({isolated} isolated cells listed, not counted)", stats.summary("table 2"))
                }),
            })
        }
        TableId::Three => {
            let mass = a.mass.unwrap_or(1.0);
            let coupling = a.coupling.unwrap_or(std::f64::consts::SQRT_2);
            let step = (!a.no_oracle).then_some(a.step);
            let rows = tables::table3(mass, coupling, &golden.table3, step)?;
            let mut cols = vec![
                "state", "n", "l", "g", "alpha", "closed_form", "bound", "oracle", "oracle_nodes",
                "oracle_converged",
            ];
            if a.diff {
                cols.extend(["printed_closed_form", "printed_numerical", "diff_closed_form", "diff_oracle"]);
            }
            let mut ds = Dataset::new("table 3", cols)
                .param("params", json!({"m": mass, "A": coupling, "alpha": "g*A", "h": step}));
            let (mut s_nu, mut s_or) = (DiffStats::default(), DiffStats::default());
            for r in &rows {
                let oracle = r.oracle.map(|o| o.energy);
                let mut row: Vec<Value> = vec![
                    r.state.as_str().into(),
                    r.n.into(),
                    r.l.into(),
                    r.g.into(),
                    (r.g * coupling).into(),
                    r.level.energy.into(),
                    r.level.bound.into(),
                    oracle.into(),
                    r.oracle.map_or(Value::Null, |o| o.node_count.into()),
                    r.oracle.map_or(Value::Null, |o| o.converged.into()),
                ];
                if a.diff {
                    let (nu, num) = r.reference;
                    row.extend([
                        nu.into(),
                        num.into(),
                        (r.level.energy - nu).abs().into(),
                        abs_diff(oracle, Some(num)).into(),
                    ]);
                    s_nu.add(Some(r.level.energy), Some(nu));
                    if oracle.is_some() {
                        s_or.add(oracle, Some(num));
                    }
                }
                ds.push(row);
            }
            let summary = a.diff.then(|| {
                let mut s = s_nu.summary("table 3 closed form");
                if step.is_some() {
                    s.push('\n');
                    s.push_str(&s_or.summary("table 3 shooting"));
                }
                s
            });
            Ok(Report { dataset: ds, summary })
        }
        TableId::Four | TableId::Five => {
            let (branch, defaults, refs, orbital, name) = if a.id == TableId::Four {
                (Branch::Spin, tables::table4_params(), &golden.table4, "l", "table 4")
            } else {
                (Branch::Pseudospin, tables::table5_params(), &golden.table5, "l_tilde", "table 5")
            };
            let p = PhysicalParams::new(
                a.mass.unwrap_or(defaults.mass()),
                a.coupling.unwrap_or(defaults.coupling()),
                a.alpha.unwrap_or(defaults.screening()),
                a.symmetry.unwrap_or(defaults.symmetry_constant()),
            )?;
            let rows = tables::dirac_table(branch, &p, refs)?;
            let mut cols = vec![
                "block", orbital, "n", "kappa", "label", "E_minus", "class_minus", "E_plus", "class_plus",
                "residual_minus", "residual_plus",
            ];
            if a.diff {
                cols.extend(["printed_label", "printed_minus", "printed_plus", "diff_minus", "diff_plus", "note"]);
            }
            let mut ds = Dataset::new(name, cols).param("params", params_json(branch, &p));
            let mut stats = DiffStats::default();
            for r in &rows {
                let mut row: Vec<Value> = vec![
                    r.block.as_str().into(),
                    r.orbital.into(),
                    r.state.n().into(),
                    r.state.kappa().into(),
                    r.state.label().into(),
                    r.pair.minus.energy.into(),
                    r.pair.minus.class.token().into(),
                    r.pair.plus.energy.into(),
                    r.pair.plus.class.token().into(),
                    r.residuals.0.into(),
                    r.residuals.1.into(),
                ];
                if a.diff {
                    let (rm, rp) = (r.reference.map(|x| x.0), r.reference.map(|x| x.1));
                    row.extend([
                        r.printed.clone().map_or(Value::Null, Value::Text),
                        rm.into(),
                        rp.into(),
                        abs_diff(r.pair.minus.energy, rm).into(),
                        abs_diff(r.pair.plus.energy, rp).into(),
                        if r.sign_mismatch() { "sign".into() } else { Value::Null },
                    ]);
                    stats.add(r.pair.minus.energy, rm);
                    stats.add(r.pair.plus.energy, rp);
                }
                ds.push(row);
            }
            Ok(Report {
                dataset: ds,
                summary: a.diff.then(|| {
                    let flips = rows.iter().filter(|r| r.sign_mismatch()).count();
                    format!("{} ({flips} rows match a printed value only up to sign)", stats.summary(name))
                }),
            })
        }
    }
}

fn run_spectrum(a: &SpectrumArgs) -> CliResult<Dataset> {
    let (branch, p) = resolve(&a.phys)?;
    let s = StateIndex::new(a.n, a.kappa)?;
    let params = params_json(branch, &p);
    if a.strength > 0.0 {
        let cp = CentrifugalAugmentedParams::new(p, a.strength, branch)?;
        let sol = centrifugal_augmented_energy(&cp, s);
        let mut ds = Dataset::new(
            "spectrum",
            ["n", "kappa", "label", "root", "energy", "class", "residual", "kappa_eff", "iterations", "converged"],
        )
        .param("params", params)
        .param("D", a.strength);
        for (sign, outcome) in [("plus", &sol.plus), ("minus", &sol.minus)] {
            let mut row: Vec<Value> = vec![s.n().into(), s.kappa().into(), s.label().into(), sign.into()];
            match outcome {
                RootOutcome::Solved(fp) => row.extend([
                    fp.energy.into(),
                    fp.class.token().into(),
                    centrifugal_residual(&cp, s.n(), fp).into(),
                    fp.kappa_eff.into(),
                    fp.iterations.into(),
                    fp.converged.into(),
                ]),
                RootOutcome::Absent(class) => row.extend([
                    Value::Null,
                    class.token().into(),
                    Value::Null,
                    Value::Null,
                    Value::Null,
                    Value::Null,
                ]),
                RootOutcome::Failed(e) => return Err(e.clone().into()),
            }
            ds.push(row);
        }
        return Ok(ds);
    }
    let pair = solve_pair(branch, &p, s)?;
    let mut ds = Dataset::new("spectrum", ["n", "kappa", "label", "root", "energy", "class", "residual"])
        .param("params", params);
    for (sign, root) in [("plus", pair.plus), ("minus", pair.minus)] {
        ds.push(vec![
            s.n().into(),
            s.kappa().into(),
            s.label().into(),
            sign.into(),
            root.energy.into(),
            root.class.token().into(),
            residual(branch, &p, s, root).into(),
        ]);
    }
    Ok(ds)
}

/// `lo, lo + step, …` up to `hi` (inclusive within rounding).
pub fn grid(lo: f64, hi: f64, step: f64) -> CliResult<Vec<f64>> {
    if !(lo < hi) || !(step > 0.0) || !step.is_finite() {
        return Err(CliError::Invalid(format!(
            "sweep needs from < to and step > 0 (got {lo}, {hi}, {step})"
        )));
    }
    let count = ((hi - lo) / step + 1e-9).floor() as usize;
    Ok((0..=count).map(|i| lo + i as f64 * step).collect())
}

fn run_sweep(a: &SweepArgs) -> CliResult<Dataset> {
    let points = match (&a.values, a.from, a.to, a.step) {
        (Some(v), ..) if !v.is_empty() => v.clone(),
        (None, Some(lo), Some(hi), Some(step)) => grid(lo, hi, step)?,
        _ => {
            return Err(CliError::Invalid(
                "sweep needs --values or all of --from/--to/--step".into(),
            ))
        }
    };
    let (mut branch, base) = resolve(&a.phys)?;
    match a.param {
        SweepParam::Cs => branch = Branch::Spin,
        SweepParam::Cps => branch = Branch::Pseudospin,
        _ => {}
    }
    if a.phys.cs.is_some() && branch == Branch::Pseudospin || a.phys.cps.is_some() && branch == Branch::Spin {
        return Err(CliError::Invalid("swept constant contradicts the branch".into()));
    }
    let states = a
        .states
        .iter()
        .map(|&(n, k)| StateIndex::new(n, k))
        .collect::<Result<Vec<_>, _>>()?;
    let name = match a.param {
        SweepParam::Coupling => "A",
        SweepParam::Alpha => "alpha",
        SweepParam::Cs => "Cs",
        SweepParam::Cps => "Cps",
    };
    let rows: Vec<Vec<Value>> = points
        .par_iter()
        .map(|&x| -> CliResult<Vec<Vec<Value>>> {
            let p = match a.param {
                SweepParam::Coupling => base.with_coupling(x)?,
                SweepParam::Alpha => base.with_screening(x)?,
                SweepParam::Cs | SweepParam::Cps => base.with_symmetry_constant(x)?,
            };
            states
                .iter()
                .map(|&s| {
                    let pair = solve_pair(branch, &p, s)?;
                    Ok(vec![
                        x.into(),
                        s.n().into(),
                        s.kappa().into(),
                        pair.plus.energy.into(),
                        pair.plus.class.token().into(),
                        pair.minus.energy.into(),
                        pair.minus.class.token().into(),
                    ])
                })
                .collect()
        })
        .collect::<CliResult<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    let mut ds = Dataset::new(
        "sweep",
        [name, "n", "kappa", "E_plus", "class_plus", "E_minus", "class_minus"],
    )
    .param("params", params_json(branch, &base))
    .param("swept", name);
    for row in rows {
        ds.push(row);
    }
    Ok(ds)
}

fn choose_root(pair: &EnergyPair, requested: Option<RootArg>) -> Option<(RootSign, Root)> {
    let roots = [(RootSign::Plus, pair.plus), (RootSign::Minus, pair.minus)];
    match requested {
        Some(RootArg::Plus) => Some(roots[0]),
        Some(RootArg::Minus) => Some(roots[1]),
        None => roots
            .iter()
            .find(|(_, r)| r.class.is_valid())
            .or_else(|| roots.iter().find(|(_, r)| r.class.admits_wavefunction()))
            .copied(),
    }
}

fn run_wavefunction(a: &WavefunctionArgs) -> CliResult<Dataset> {
    let (branch, p) = resolve(&a.phys)?;
    let s = StateIndex::new(a.n, a.kappa)?;
    if a.points < 2 || !(a.r_min > 0.0) {
        return Err(CliError::Invalid("need --points >= 2 and --r-min > 0".into()));
    }
    let pair = tables::energy_pair(branch, &p, s)?;
    let Some((sign, root)) = choose_root(&pair, a.root) else {
        return Err(CliError::NoWavefunction {
            state: s.to_string(),
            classes: format!("plus {}, minus {}", pair.plus.class.token(), pair.minus.class.token()),
        });
    };
    let Some(energy) = root.energy else {
        return Err(CliError::NoWavefunction {
            state: s.to_string(),
            classes: format!("{} {}", sign.as_str(), root.class.token()),
        });
    };
    let psi = match branch {
        Branch::Spin => spin_wavefunction(&p, s, energy)?,
        Branch::Pseudospin => pseudospin_wavefunction(&p, s, energy)?,
    };
    let r_max = a.r_max.unwrap_or_else(|| psi.extent());
    if !(r_max > a.r_min) {
        return Err(CliError::Invalid(format!("--r-max {r_max} must exceed --r-min {}", a.r_min)));
    }
    let extent = psi.extent();
    let f2 = quadrature_norm(|r| psi.upper(r), extent)?;
    let g2 = quadrature_norm(|r| psi.lower(r), extent)?;
    let mut ds = Dataset::new("wavefunction", ["r", "F", "G", "int_F2", "int_G2", "int_total"])
        .param("params", params_json(branch, &p))
        .param("state", json!({"n": s.n(), "kappa": s.kappa(), "label": s.label()}))
        .param("root", sign.as_str())
        .param("energy", energy)
        .param("class", root.class.token());
    for r in log_grid(a.r_min, r_max, a.points) {
        ds.push(vec![
            r.into(),
            psi.upper(r).into(),
            psi.lower(r).into(),
            f2.into(),
            g2.into(),
            (f2 + g2).into(),
        ]);
    }
    Ok(ds)
}

fn run_oracle(a: &OracleArgs) -> CliResult<Dataset> {
    let alpha = a.alpha.unwrap_or(a.g * a.coupling);
    let (potential, name) = match a.potential {
        PotentialArg::Yukawa => (
            Potential::Yukawa {
                coupling: a.coupling,
                screening: alpha,
            },
            "yukawa",
        ),
        PotentialArg::Approx => (
            Potential::ApproxYukawa {
                coupling: a.coupling,
                screening: alpha,
            },
            "approx",
        ),
        PotentialArg::Coulomb => (Potential::Coulomb { coupling: a.coupling }, "coulomb"),
    };
    let mut problem = RadialProblem::new(a.m, a.l, potential)?.with_step(a.h)?;
    if let Some(r_max) = a.r_max {
        problem = problem.with_r_max(r_max)?;
    }
    let res = shoot_eigenvalue(&problem, a.n)?;
    let screening = match a.potential {
        PotentialArg::Coulomb => 0.0,
        _ => alpha,
    };
    let closed = nonrel_energy(&NonRelParams::new(a.m, a.coupling, screening, a.n, a.l)?);
    let mut ds = Dataset::new(
        "oracle",
        [
            "potential", "n", "l", "alpha", "energy", "node_count", "converged", "residual", "r_max",
            "closed_form", "abs_diff",
        ],
    )
    .param("params", json!({"m": a.m, "A": a.coupling, "alpha": screening, "h": a.h}));
    ds.push(vec![
        name.into(),
        a.n.into(),
        a.l.into(),
        screening.into(),
        res.energy.into(),
        res.node_count.into(),
        res.converged.into(),
        res.residual.into(),
        res.r_max.into(),
        closed.energy.into(),
        (res.energy - closed.energy).abs().into(),
    ]);
    Ok(ds)
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::Parser;

    fn run_args(args: &[&str]) -> CliResult<Report> {
        let cli = Cli::try_parse_from(std::iter::once("dirac-yukawa").chain(args.iter().copied()))
            .expect("arguments parse");
        run(&cli)
    }

    fn floats(d: &Dataset, col: &str) -> Vec<Option<f64>> {
        d.values(col).unwrap().into_iter().map(Value::as_f64).collect()
    }

    #[test]
    fn table4_row() {
        let d = run_args(&["table", "4"]).unwrap().dataset;
        let (n, k) = (floats(&d, "n"), floats(&d, "kappa"));
        let i = (0..d.rows.len()).find(|&i| n[i] == Some(1.0) && k[i] == Some(-1.0)).unwrap();
        assert!((floats(&d, "E_minus")[i].unwrap() + 0.098076).abs() < 1e-5);
        assert!((floats(&d, "E_plus")[i].unwrap() - 4.05808).abs() < 1e-5);
    }

    #[test]
    fn table2_row() {
        let d = run_args(&["table", "2"]).unwrap().dataset;
        let row = d
            .rows
            .iter()
            .find(|r| r[0] == Value::Float(0.0) && r[1] == Value::Int(1) && r[2] == Value::from("plus"))
            .unwrap();
        assert!((row[3].as_f64().unwrap() - 4.502).abs() < 1.5e-3);
    }

    #[test]
    fn cs_sweep_matches_table2() {
        let golden = Golden::embedded();
        let cs: Vec<String> = golden
            .table2
            .iter()
            .filter(|r| r.kappa == 1 && r.root == RootSign::Plus)
            .map(|r| r.cs.to_string())
            .collect();
        let sweep = run_args(&["sweep", "--param", "Cs", "--values", &cs.join(",")]).unwrap().dataset;
        let table = run_args(&["table", "2"]).unwrap().dataset;
        let column: Vec<Option<f64>> = table
            .rows
            .iter()
            .filter(|r| r[1] == Value::Int(1) && r[2] == Value::from("plus"))
            .map(|r| r[3].as_f64())
            .collect();
        assert_eq!(floats(&sweep, "E_plus"), column);
    }

    #[test]
    fn coupling_sweep_is_decreasing() {
        let d = run_args(&["sweep", "--param", "A", "--from", "0.1", "--to", "2", "--step", "0.1", "--Cs", "4.9"])
            .unwrap()
            .dataset;
        // weak couplings do not bind
        let classes = d.values("class_plus").unwrap();
        let e: Vec<f64> = floats(&d, "E_plus")
            .into_iter()
            .zip(classes)
            .filter(|(_, c)| **c == Value::from("BOUND"))
            .map(|(e, _)| e.unwrap())
            .collect();
        assert_eq!(e.len(), 19);
        assert!(e.windows(2).all(|w| w[1] < w[0]));
    }

    #[test]
    fn alpha_sweep_enumerates_values() {
        let d = run_args(&["sweep", "--param", "alpha", "--values", "0.01,0.02,0.05,0.1", "--Cs", "4.9"])
            .unwrap()
            .dataset;
        assert_eq!(floats(&d, "alpha"), vec![Some(0.01), Some(0.02), Some(0.05), Some(0.1)]);
    }

    #[test]
    fn wavefunction_nodes() {
        for (n, nodes) in [("0", 0), ("1", 1)] {
            let d = run_args(&["wavefunction", "--Cs", "4.9", "--n", n, "--kappa", "1"]).unwrap().dataset;
            let f: Vec<f64> = floats(&d, "F").into_iter().map(Option::unwrap).collect();
            let changes = f.windows(2).filter(|w| w[0] * w[1] < 0.0).count();
            assert_eq!(changes, nodes);
            assert!((floats(&d, "int_F2")[0].unwrap() - 1.0).abs() < 1e-8);
            assert_eq!(d.rows.len(), 512);
        }
    }

    #[test]
    fn wavefunction_rejects_unbound_state() {
        let err = run_args(&["wavefunction", "--Cs", "4.9", "--n", "0", "--kappa", "-1"]).unwrap_err();
        assert_eq!(err.exit_code(), 3);
        assert!(err.to_string().contains("UNDEFINED"));
    }

    #[test]
    fn exit_codes() {
        let err = run_args(&["spectrum", "--M", "-1", "--n", "0", "--kappa", "1"]).unwrap_err();
        assert_eq!(err.exit_code(), 2);
        let err = run_args(&["sweep", "--param", "A", "--from", "1", "--to", "0", "--step", "0.1"]).unwrap_err();
        assert_eq!(err.exit_code(), 2);
        let err = run_args(&["spectrum", "--Cps", "-5", "--branch", "spin", "--n", "0", "--kappa", "1"]).unwrap_err();
        assert_eq!(err.exit_code(), 2);
    }

    #[test]
    fn spectrum_centrifugal_and_coulomb() {
        let d = run_args(&["spectrum", "--Cs", "4.9", "--n", "0", "--kappa", "1", "--D", "0.1"]).unwrap().dataset;
        assert_eq!(d.rows[0][9], Value::Bool(true));
        let d = run_args(&["spectrum", "--alpha", "0", "--n", "0", "--kappa", "1"]).unwrap().dataset;
        assert!((floats(&d, "energy")[0].unwrap() - 75.0 / 17.0).abs() < 1e-12);
    }

    #[test]
    fn oracle_hydrogen() {
        let d = run_args(&["oracle", "--potential", "coulomb", "--A", "1"]).unwrap().dataset;
        assert!((floats(&d, "energy")[0].unwrap() + 0.5).abs() < 1e-8);
    }
}
