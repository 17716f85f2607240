use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use rayon::prelude::*;
use serde_json::{json, Value};
use twistpres::abelianize::{abelian_invariants, AbelianInvariants};
use twistpres::catalog::chains::{all_fixtures, DerivationFixture};
use twistpres::catalog::{self, CatalogKey};
use twistpres::derivation::{check_derivation, DerivationReport, DerivationScript};
use twistpres::f2rep::{assignment_for, verify_presentation, VerifyReport};
use twistpres::rewriting::{build_coset_structure, reidemeister_schreier_with_report};
use twistpres::serialize::{parse_json, serialize, Format};
use twistpres::{GeneratorSymbol, Kind, Presentation, Variant};

use crate::keys::{select, GenusRange};
use crate::report::{
    emit, invariants_json, presentation_text, pretty, stamp_json, stamp_text, timestamp,
};
use crate::{Command, KeyArgs, OutArgs, OutFormat, Outcome};

/// Genus range of the shipped catalog corpus.
pub const CORPUS_GENERA: std::ops::RangeInclusive<u32> = 3..=12;

pub fn run(cmd: Command) -> Result<Outcome> {
    match cmd {
        Command::Gen { key, out } => cmd_gen(&key, &out),
        Command::Rs { key, rename, out } => cmd_rs(&key, rename, &out),
        Command::Verify { key, input, out } => cmd_verify(&key, input.as_deref(), &out),
        Command::Abelianize { key, input, out } => cmd_abelianize(&key, input.as_deref(), &out),
        Command::CheckDerivation {
            script,
            input,
            fixtures,
            out,
        } => cmd_check_derivation(&script, input.as_deref(), &fixtures, &out),
        Command::Reproduce { g, s, out } => cmd_reproduce(&g, s, &out),
        Command::Fixtures { fixtures, check } => cmd_fixtures(&fixtures, check),
    }
}

fn keys_of(k: &KeyArgs) -> Result<Vec<CatalogKey>> {
    let Some(g) = &k.g else {
        bail!("--g is required (a genus such as 5 or a range such as 3..10)");
    };
    select(g, k.s, k.kind, k.variant)
}

fn read_presentation(path: &Path) -> Result<Presentation> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_json(&text).with_context(|| format!("{} is not a presentation file", path.display()))
}

/// Presentations named by `--input` or by the key flags, with display names.
fn inputs(key: &KeyArgs, input: Option<&Path>) -> Result<Vec<(String, Presentation)>> {
    if let Some(path) = input {
        return Ok(vec![(path.display().to_string(), read_presentation(path)?)]);
    }
    keys_of(key)?
        .into_iter()
        .map(|k| Ok((k.file_stem(), catalog::build(&k)?)))
        .collect()
}

fn file_format(f: Option<OutFormat>) -> (Option<Format>, &'static str) {
    match f.unwrap_or(OutFormat::Json) {
        OutFormat::Json => (Some(Format::Json), "json"),
        OutFormat::Gap => (Some(Format::Gap), "g"),
        OutFormat::Magma => (Some(Format::Magma), "m"),
        OutFormat::Text => (None, "txt"),
    }
}

fn render(p: &Presentation, f: Option<Format>) -> String {
    match f {
        Some(f) => serialize(p, f),
        None => presentation_text(p),
    }
}

/// Write each named presentation as `<dir>/<name>.<ext>`, or concatenate
/// them on stdout.
fn write_presentations(items: &[(String, Presentation)], out: &OutArgs) -> Result<()> {
    let (fmt, ext) = file_format(out.format);
    match &out.out {
        Some(dir) => {
            fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
            for (name, p) in items {
                let path = dir.join(format!("{name}.{ext}"));
                fs::write(&path, render(p, fmt))
                    .with_context(|| format!("writing {}", path.display()))?;
                println!("{}", path.display());
            }
        }
        None => {
            for (_, p) in items {
                print!("{}", render(p, fmt));
            }
        }
    }
    Ok(())
}

fn cmd_gen(key: &KeyArgs, out: &OutArgs) -> Result<Outcome> {
    let items = keys_of(key)?
        .into_iter()
        .map(|k| Ok((k.file_stem(), catalog::build(&k)?)))
        .collect::<Result<Vec<_>>>()?;
    write_presentations(&items, out)?;
    Ok(Outcome::Ok)
}

/// Raw rewriting of the standard mapping class group presentation.
pub fn rewrite(
    g: u32,
    s: u8,
    rename: bool,
) -> Result<(Presentation, Presentation, twistpres::rewriting::RsReport)> {
    let key = CatalogKey::new(g, s, Kind::Mcg, Variant::Standard)?;
    let mcg = catalog::build(&key)?;
    let c = build_coset_structure(&catalog::mcg_parity(g, s), GeneratorSymbol::y())?;
    let (raw, report) = reidemeister_schreier_with_report(&mcg, &c)?;
    let raw = if rename {
        catalog::apply_renaming(&raw, &catalog::conventional_renaming(g, s))?
    } else {
        raw
    };
    Ok((mcg, raw, report))
}

fn cmd_rs(key: &KeyArgs, rename: bool, out: &OutArgs) -> Result<Outcome> {
    if key.kind.is_some_and(|k| k != Kind::Mcg)
        || key.variant.is_some_and(|v| v != Variant::Standard)
    {
        bail!("rs rewrites the standard mapping class group presentation; drop --kind/--variant");
    }
    let keys = keys_of(&KeyArgs {
        kind: Some(Kind::Mcg),
        variant: Some(Variant::Standard),
        ..key.clone()
    })?;
    let items = keys
        .iter()
        .map(|k| {
            let (_, raw, _) = rewrite(k.g, k.s, rename)?;
            Ok((format!("rs_g{}_s{}", k.g, k.s), raw))
        })
        .collect::<Result<Vec<_>>>()?;
    write_presentations(&items, out)?;
    Ok(Outcome::Ok)
}

fn verify_one(p: &Presentation) -> Result<VerifyReport> {
    let r = assignment_for(p)?;
    Ok(verify_presentation(p, &r)?)
}

fn cmd_verify(key: &KeyArgs, input: Option<&Path>, out: &OutArgs) -> Result<Outcome> {
    let items = inputs(key, input)?;
    let reports = items
        .par_iter()
        .map(|(name, p)| verify_one(p).with_context(|| format!("verifying {name}")))
        .collect::<Result<Vec<_>>>()?;
    let failed: usize = reports.iter().map(|r| r.failures.len()).sum();
    let ts = timestamp(out.no_timestamp);
    let content = match out.format.unwrap_or(OutFormat::Text) {
        OutFormat::Json => {
            let list: Vec<Value> = items
                .iter()
                .zip(&reports)
                .map(|((name, _), r)| {
                    json!({
                        "presentation": name,
                        "checked": r.checked,
                        "failures": r.failures,
                        "relators": r.rows.iter().map(|(l, ok)| json!({"label": l, "pass": ok})).collect::<Vec<_>>(),
                        "y_matrix": r.y_matrix,
                    })
                })
                .collect();
            pretty(&stamp_json(
                json!({ "presentations": list, "total_failures": failed }),
                &ts,
            ))
        }
        OutFormat::Text => {
            let mut s = String::new();
            for ((name, _), r) in items.iter().zip(&reports) {
                s.push_str(&format!(
                    "== {name}: {} relators, {} failures\n",
                    r.checked,
                    r.failures.len()
                ));
                for (label, ok) in &r.rows {
                    s.push_str(&format!("{}  {label}\n", if *ok { "PASS" } else { "FAIL" }));
                }
            }
            s.push_str(&format!("total failures: {failed}\n"));
            stamp_text(s, &ts)
        }
        f => bail!("verify reports are text or json, not {f:?}"),
    };
    emit(out.out.as_deref(), &content)?;
    Ok(if failed == 0 {
        Outcome::Ok
    } else {
        Outcome::CheckFailed
    })
}

fn cmd_abelianize(key: &KeyArgs, input: Option<&Path>, out: &OutArgs) -> Result<Outcome> {
    let items = inputs(key, input)?;
    let invs: Vec<AbelianInvariants> = items
        .par_iter()
        .map(|(_, p)| abelian_invariants(p))
        .collect();
    let ts = timestamp(out.no_timestamp);
    let content = match out.format.unwrap_or(OutFormat::Text) {
        OutFormat::Json => {
            let list: Vec<Value> = items
                .iter()
                .zip(&invs)
                .map(|((name, _), inv)| json!({ "presentation": name, "invariants": invariants_json(inv) }))
                .collect();
            pretty(&stamp_json(json!({ "presentations": list }), &ts))
        }
        OutFormat::Text => {
            let body: String = items
                .iter()
                .zip(&invs)
                .map(|((name, _), inv)| format!("{name}: {inv}\n"))
                .collect();
            stamp_text(body, &ts)
        }
        f => bail!("abelianize reports are text or json, not {f:?}"),
    };
    emit(out.out.as_deref(), &content)?;
    Ok(Outcome::Ok)
}

struct DerivationRow {
    file: String,
    name: String,
    report: DerivationReport,
}

fn check_file(path: &Path, input: Option<&Presentation>) -> Result<DerivationRow> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let file = path.display().to_string();
    if let Ok(f) = DerivationFixture::from_json(&text) {
        let report = f.check().with_context(|| format!("checking {file}"))?;
        return Ok(DerivationRow {
            file,
            name: f.name,
            report,
        });
    }
    let script: DerivationScript = serde_json::from_str(&text).with_context(|| {
        format!("{file} is neither a derivation fixture nor a derivation script")
    })?;
    let Some(p) = input else {
        bail!("{file} is a bare derivation script; pass the presentation with --input");
    };
    Ok(DerivationRow {
        name: path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_default(),
        file,
        report: check_derivation(p, &script),
    })
}

fn json_files(dir: &Path) -> Result<Vec<PathBuf>> {
    let mut files: Vec<PathBuf> = fs::read_dir(dir)
        .with_context(|| format!("reading {}", dir.display()))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    files.sort();
    Ok(files)
}

fn cmd_check_derivation(
    scripts: &[PathBuf],
    input: Option<&Path>,
    fixtures: &Path,
    out: &OutArgs,
) -> Result<Outcome> {
    let pres = input.map(read_presentation).transpose()?;
    let files = if scripts.is_empty() {
        if pres.is_some() {
            bail!("--input needs at least one --script");
        }
        let files = json_files(&fixtures.join("derivations"))?;
        if files.is_empty() {
            bail!(
                "no derivation files under {}",
                fixtures.join("derivations").display()
            );
        }
        files
    } else {
        scripts.to_vec()
    };
    let rows = files
        .iter()
        .map(|f| check_file(f, pres.as_ref()))
        .collect::<Result<Vec<_>>>()?;
    let failed = rows.iter().filter(|r| !r.report.ok).count();
    let ts = timestamp(out.no_timestamp);
    let content = match out.format.unwrap_or(OutFormat::Text) {
        OutFormat::Json => {
            let list: Vec<Value> = rows
                .iter()
                .map(|r| json!({ "file": r.file, "name": r.name, "report": r.report }))
                .collect();
            pretty(&stamp_json(
                json!({ "derivations": list, "failed": failed }),
                &ts,
            ))
        }
        OutFormat::Text => {
            let body: String = rows
                .iter()
                .map(|r| format!("{}: {}\n", r.name, r.report))
                .collect();
            stamp_text(
                format!("{body}{} checked, {failed} failed\n", rows.len()),
                &ts,
            )
        }
        f => bail!("check-derivation reports are text or json, not {f:?}"),
    };
    emit(out.out.as_deref(), &content)?;
    Ok(if failed == 0 {
        Outcome::Ok
    } else {
        Outcome::CheckFailed
    })
}

/// One line of the reproduction table.
pub struct ReproRow {
    pub g: u32,
    pub mcg_generators: usize,
    pub mcg_relators: usize,
    pub verify_failures: usize,
    pub rs_generators: usize,
    pub rs_relators_rewritten: usize,
    pub rs_relators: usize,
    pub rs_invariants: AbelianInvariants,
    pub twist_invariants: AbelianInvariants,
}

impl ReproRow {
    pub fn counts_ok(&self) -> bool {
        self.rs_generators == 2 * self.mcg_generators - 1
            && self.rs_relators_rewritten == 2 * self.mcg_relators
    }

    pub fn equal(&self) -> bool {
        self.rs_invariants == self.twist_invariants
    }

    pub fn ok(&self) -> bool {
        self.verify_failures == 0 && self.counts_ok() && self.equal()
    }
}

pub fn reproduce_row(g: u32, s: u8) -> Result<ReproRow> {
    let (mcg, raw, report) = rewrite(g, s, false)?;
    let verify_failures = verify_one(&mcg)?.failures.len();
    let twist = catalog::build(&CatalogKey::new(g, s, Kind::Twist, Variant::Reduced)?)?;
    Ok(ReproRow {
        g,
        mcg_generators: mcg.generators().len(),
        mcg_relators: mcg.relators().len(),
        verify_failures,
        rs_generators: raw.generators().len(),
        rs_relators_rewritten: report.rewritten,
        rs_relators: raw.relators().len(),
        rs_invariants: abelian_invariants(&raw),
        twist_invariants: abelian_invariants(&twist),
    })
}

fn cmd_reproduce(g: &GenusRange, s: u8, out: &OutArgs) -> Result<Outcome> {
    let valid = |g: u32| {
        CatalogKey::new(g, s, Kind::Mcg, Variant::Standard).is_ok()
            && CatalogKey::new(g, s, Kind::Twist, Variant::Reduced).is_ok()
    };
    let (gs, skipped): (Vec<u32>, Vec<u32>) = g.iter().partition(|&g| valid(g));
    if gs.is_empty() {
        bail!(
            "no genus in {g} has both a mapping class group and a twist presentation with s = {s}"
        );
    }
    let rows = gs
        .par_iter()
        .map(|&g| reproduce_row(g, s))
        .collect::<Result<Vec<_>>>()?;
    let all_ok = rows.iter().all(ReproRow::ok);
    let ts = timestamp(out.no_timestamp);
    let content = match out.format.unwrap_or(OutFormat::Text) {
        OutFormat::Json => {
            let list: Vec<Value> = rows
                .iter()
                .map(|r| {
                    json!({
                        "g": r.g,
                        "mcg_generators": r.mcg_generators,
                        "mcg_relators": r.mcg_relators,
                        "verify_failures": r.verify_failures,
                        "rs_generators": r.rs_generators,
                        "rs_relators_rewritten": r.rs_relators_rewritten,
                        "rs_relators": r.rs_relators,
                        "counts_ok": r.counts_ok(),
                        "rs_invariants": invariants_json(&r.rs_invariants),
                        "twist_invariants": invariants_json(&r.twist_invariants),
                        "verdict": if r.equal() { "EQUAL" } else { "DIFFER" },
                    })
                })
                .collect();
            pretty(&stamp_json(
                json!({ "s": s, "rows": list, "skipped": skipped, "ok": all_ok }),
                &ts,
            ))
        }
        OutFormat::Text => {
            let mut t = format!(
                "{:>3} {:>5} {:>5} {:>6} {:>6} {:>7} {:>6}  {:<16} {:<16} {}\n",
                "g", "gens", "rels", "vfail", "rsgen", "rsrel", "counts", "rs", "twist", "verdict"
            );
            for r in &rows {
                t.push_str(&format!(
                    "{:>3} {:>5} {:>5} {:>6} {:>6} {:>7} {:>6}  {:<16} {:<16} {}\n",
                    r.g,
                    r.mcg_generators,
                    r.mcg_relators,
                    r.verify_failures,
                    r.rs_generators,
                    r.rs_relators_rewritten,
                    if r.counts_ok() { "ok" } else { "BAD" },
                    r.rs_invariants.to_string(),
                    r.twist_invariants.to_string(),
                    if r.equal() { "EQUAL" } else { "DIFFER" },
                ));
            }
            if !skipped.is_empty() {
                let list: Vec<String> = skipped.iter().map(u32::to_string).collect();
                t.push_str(&format!(
                    "skipped g = {} (no presentation with s = {s})\n",
                    list.join(", ")
                ));
            }
            stamp_text(t, &ts)
        }
        f => bail!("reproduce reports are text or json, not {f:?}"),
    };
    emit(out.out.as_deref(), &content)?;
    Ok(if all_ok {
        Outcome::Ok
    } else {
        Outcome::CheckFailed
    })
}

/// Every corpus file as (relative path, content).
pub fn corpus() -> Result<Vec<(PathBuf, String)>> {
    let mut files = Vec::new();
    for key in CatalogKey::all(CORPUS_GENERA) {
        let p = catalog::build(&key)?;
        files.push((
            Path::new("catalog").join(format!("{}.json", key.file_stem())),
            serialize(&p, Format::Json),
        ));
    }
    for f in all_fixtures()? {
        files.push((
            Path::new("derivations").join(format!("{}.json", f.name)),
            f.to_json(),
        ));
    }
    Ok(files)
}

fn cmd_fixtures(dir: &Path, check: bool) -> Result<Outcome> {
    let files = corpus()?;
    if check {
        let mut drift = 0;
        for (rel, content) in &files {
            let path = dir.join(rel);
            match fs::read_to_string(&path) {
                Ok(old) if &old == content => {}
                Ok(_) => {
                    drift += 1;
                    println!("differs: {}", path.display());
                }
                Err(_) => {
                    drift += 1;
                    println!("missing: {}", path.display());
                }
            }
        }
        println!("{} files, {drift} out of date", files.len());
        return Ok(if drift == 0 {
            Outcome::Ok
        } else {
            Outcome::CheckFailed
        });
    }
    for (rel, content) in &files {
        let path = dir.join(rel);
        if let Some(parent) = path.parent() {
            fs::create_dir_all(parent).with_context(|| format!("creating {}", parent.display()))?;
        }
        fs::write(&path, content).with_context(|| format!("writing {}", path.display()))?;
    }
    println!("wrote {} files under {}", files.len(), dir.display());
    Ok(Outcome::Ok)
}
