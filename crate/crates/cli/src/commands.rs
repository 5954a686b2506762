use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use anyhow::Context;
use latcoh_core::formats::{CurveFile, ModuleFile, RootFile, SemigroupFile};
use latcoh_core::graded::{
    conjecture_sweep as sweep, module_from_root, module_of_set, roots_isomorphic, to_ascii, to_dot,
    try_root_from_weight, GradedRoot, TowerModule,
};
use latcoh_core::multibranch::{
    euler_delta_check, hilbert_from_parametrization, lattice_cohomology, poincare_series,
    HilbertOptions,
};
use latcoh_core::reconstruct::{
    compute_e, detect_lg1_equals_2, initial_part, reconstruct as run_reconstruct,
};
use latcoh_core::semigroup::{enumerate_plane_branch_semigroups, GcdChain, NumericalSemigroup};
use latcoh_core::weight1d::weight_sequence;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::{
    CurveArgs, Failure, InputContext, OutArgs, Outcome, ReconstructArgs, RootFormat, RootIsoArgs,
    SemigroupArgs, SweepArgs,
};

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).input(format!("reading {}", path.display()))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
    Ok(())
}

fn emit(out: &OutArgs, value: &Value) -> Result<(), Failure> {
    let mut text = serde_json::to_string(value).context("serializing report")?;
    text.push('\n');
    match &out.out {
        Some(path) => write(path, &text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn write_root(path: &Path, format: Option<RootFormat>, root: &GradedRoot) -> Result<(), Failure> {
    let format = format.unwrap_or_else(|| match path.extension().and_then(|e| e.to_str()) {
        Some("json") => RootFormat::Json,
        Some("txt") => RootFormat::Ascii,
        _ => RootFormat::Dot,
    });
    let text = match format {
        RootFormat::Dot => to_dot(root),
        RootFormat::Ascii => to_ascii(root),
        RootFormat::Json => RootFile::to_json(root) + "\n",
    };
    write(path, &text)
}

fn chain_json(chain: &GcdChain) -> Value {
    json!({ "l": chain.l, "n": chain.n, "partial_conductors": chain.partial_conductors })
}

pub fn semigroup(args: SemigroupArgs) -> Result<Outcome, Failure> {
    let s = match &args.input {
        Some(path) => {
            SemigroupFile::parse(&read(path)?).input(format!("parsing {}", path.display()))?
        }
        None => NumericalSemigroup::from_generators(&args.gens).input("--gens")?,
    };
    let weights = weight_sequence(s.as_set());
    let root = try_root_from_weight(&weights).input("building the graded root")?;
    let module = module_from_root(&root);
    let chain = s.plane_branch_chain();
    let initial = initial_part(&module).ok();
    let e = compute_e(&module);
    let lg1 = chain
        .as_ref()
        .filter(|c| c.g() >= 1)
        .map(|_| detect_lg1_equals_2(&module));

    let report = json!({
        "generators": s.min_gens(),
        "conductor": s.conductor(),
        "delta": s.delta(),
        "multiplicity": s.multiplicity(),
        "smooth": s.is_smooth(),
        "symmetric": s.is_symmetric(),
        "plane_branch": chain.is_some(),
        "gcd_chain": chain.as_ref().map(chain_json),
        "min_w0": weights.min(),
        "e": e,
        "E": initial.as_ref().map(|i| i.elements.clone()),
        "lg1_equals_2": lg1,
        "module": ModuleFile::to_value(&module),
    });

    let mut human = String::new();
    writeln!(human, "generators  {:?}", s.min_gens()).unwrap();
    writeln!(
        human,
        "c = {}  δ = {}  m = {}",
        s.conductor(),
        s.delta(),
        s.multiplicity()
    )
    .unwrap();
    match &chain {
        Some(c) => writeln!(human, "plane branch, g = {}, l = {:?}", c.g(), c.l).unwrap(),
        None => writeln!(human, "not a plane-branch semigroup").unwrap(),
    }
    writeln!(human, "min w0 = {}  e = {}", weights.min(), e).unwrap();
    if let Some(i) = &initial {
        writeln!(human, "E = {:?}", i.elements).unwrap();
    }
    if let Some(v) = lg1 {
        writeln!(human, "l_(g-1) = 2: {v}").unwrap();
    }
    eprint!("{human}");

    if let Some(path) = &args.weights {
        write(path, &weights.to_tsv())?;
    }
    if let Some(path) = &args.root {
        write_root(path, args.root_format, &root)?;
    }
    if let Some(path) = &args.module {
        write(path, &(ModuleFile::to_json(&module) + "\n"))?;
    }
    emit(&args.out, &report)?;
    Ok(Outcome::Ok)
}

pub fn reconstruct(args: ReconstructArgs) -> Result<Outcome, Failure> {
    let text = read(&args.module)?;
    let module = ModuleFile::parse(&text).input(format!("parsing {}", args.module.display()))?;
    let r = run_reconstruct(&module).input("reconstructing")?;
    let chain = r.chain();
    let lg1 = (chain.g() >= 1).then(|| detect_lg1_equals_2(&module));
    let report = json!({
        "generators": r.generators(),
        "conductor": r.semigroup.conductor(),
        "delta": r.delta,
        "multiplicity": r.multiplicity,
        "g": chain.g(),
        "gcd_chain": chain_json(&chain),
        "e": r.initial.as_ref().map_or(0, |i| i.e),
        "E": r.initial.as_ref().map_or_else(|| vec![0], |i| i.elements.clone()),
        "lg1_equals_2": lg1,
        "smooth": r.semigroup.is_smooth(),
    });
    eprintln!("generators  {:?}", r.generators());
    eprintln!(
        "δ = {}  m = {}  g = {}  l = {:?}",
        r.delta,
        r.multiplicity,
        chain.g(),
        chain.l
    );
    if let Some(i) = &r.initial {
        eprintln!("e = {}  E = {:?}", i.e, i.elements);
    }
    if let Some(v) = lg1 {
        eprintln!("l_(g-1) = 2: {v}");
    }
    emit(&args.out, &report)?;
    Ok(Outcome::Ok)
}

pub fn curve(args: CurveArgs) -> Result<Outcome, Failure> {
    let text = read(&args.input)?;
    let p = CurveFile::parse(&text).input(format!("parsing {}", args.input.display()))?;
    if let Some(c) = &args.conductor {
        if c.len() != p.r() {
            return Err(Failure::Input(anyhow::anyhow!(
                "--conductor has {} entries but the curve has {} branches",
                c.len(),
                p.r()
            )));
        }
    }
    let opts = HilbertOptions {
        bound: args.bound,
        conductor: args.conductor.clone(),
    };
    let data = hilbert_from_parametrization(&p, &opts).input("computing the Hilbert function")?;
    let grid = &data.grid;
    let coh = lattice_cohomology(grid);
    let euler = euler_delta_check(grid, &coh);
    let series = poincare_series(grid).context("Poincaré series")?;

    let report = json!({
        "branches": p.r(),
        "conductor": grid.conductor(),
        "multiplicities": data.report.multiplicities,
        "delta": grid.delta(),
        "min_w0": grid.min_w0(),
        "poincare": series.to_string(),
        "poincare_terms": series.terms,
        "euler": euler,
        "h0": ModuleFile::to_value(&coh.h0),
        "rank_profile": coh.rank_profile(),
        "torsion": coh.has_torsion(),
        "truncation": data.report.bounds,
        "arithmetic": data.report.arithmetic,
    });
    eprintln!(
        "branches {}  conductor {:?}  δ = {}",
        p.r(),
        grid.conductor(),
        grid.delta()
    );
    eprintln!("min w0 = {}  P = {}", grid.min_w0(), series);
    eprintln!(
        "eu = {}  δ = {}  {}",
        euler.eu,
        euler.delta,
        if euler.holds { "equal" } else { "DIFFERENT" }
    );

    if let Some(path) = &args.weights {
        write(path, &grid.restrict_to_conductor_box().to_tsv())?;
    }
    if let Some(path) = &args.cohomology {
        let full = json!({
            "r": coh.r,
            "min_w0": coh.min_w0,
            "levels": coh.levels,
            "bars": coh.bars,
            "h0": ModuleFile::to_value(&coh.h0),
            "higher": coh.higher,
            "euler": euler,
            "arithmetic": coh.arithmetic,
        });
        write(
            path,
            &(serde_json::to_string_pretty(&full).context("serializing cohomology")? + "\n"),
        )?;
    }
    if let Some(path) = &args.root {
        write_root(path, args.root_format, &coh.root)?;
    }
    emit(&args.out, &report)?;
    Ok(if euler.holds {
        Outcome::Ok
    } else {
        Outcome::Violation
    })
}

fn roundtrip_one(s: &NumericalSemigroup) -> bool {
    let module: TowerModule = module_of_set(s.as_set());
    matches!(run_reconstruct(&module), Ok(r) if r.semigroup == *s)
}

pub fn roundtrip(args: SweepArgs) -> Result<Outcome, Failure> {
    let all = enumerate_plane_branch_semigroups(args.max_conductor);
    let failures: Vec<Vec<u64>> = all
        .par_iter()
        .filter(|s| !roundtrip_one(s))
        .map(|s| s.min_gens().to_vec())
        .collect();
    let passed = all.len() - failures.len();
    eprintln!("tested {}, passed {}", all.len(), passed);
    for f in &failures {
        eprintln!("mismatch: {f:?}");
    }
    let report = json!({
        "max_conductor": args.max_conductor,
        "tested": all.len(),
        "passed": passed,
        "failures": failures,
    });
    emit(&args.out, &report)?;
    Ok(if failures.is_empty() {
        Outcome::Ok
    } else {
        Outcome::Violation
    })
}

pub fn root_iso(args: RootIsoArgs) -> Result<Outcome, Failure> {
    let a = RootFile::parse(&read(&args.a)?).input(format!("parsing {}", args.a.display()))?;
    let b = RootFile::parse(&read(&args.b)?).input(format!("parsing {}", args.b.display()))?;
    let iso = roots_isomorphic(&a, &b);
    println!("{}", if iso { "isomorphic" } else { "not isomorphic" });
    Ok(if iso { Outcome::Ok } else { Outcome::Negative })
}

pub fn conjecture_sweep(args: SweepArgs) -> Result<Outcome, Failure> {
    let report = sweep(args.max_conductor);
    eprintln!(
        "{} semigroups, {} distinct modules, {} module-equal pairs, {} with non-isomorphic roots",
        report.semigroups_tested,
        report.distinct_modules,
        report.module_equal_pairs,
        report.counterexamples.len()
    );
    for (x, y) in &report.counterexamples {
        eprintln!("finding: {x:?} and {y:?}");
    }
    emit(
        &args.out,
        &serde_json::to_value(&report).context("serializing report")?,
    )?;
    Ok(Outcome::Ok)
}
