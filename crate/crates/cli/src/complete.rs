use std::fs;
use std::path::PathBuf;

use clap::Args;
use dehnkit::completion::{
    closure_sets, complete, humphries, parse_presentation, quotient_iso_to_homological, verify_lemma_identities,
    verify_table1, InvPresentation, DEFAULT_CAP,
};
use serde_json::{json, Value};

use crate::report::{usage, yes_no, CmdResult, Report};
use crate::sources::{cap, read};

#[derive(Args, Debug)]
pub struct CompleteArgs {
    /// humphries1, humphries2, ... (the Humphries graph of that genus)
    #[arg(long, conflicts_with = "file")]
    preset: Option<String>,
    /// Presentation file (gens:, edge:, rel:, rule: lines)
    #[arg(long)]
    file: Option<PathBuf>,
    /// Maximum number of live elements (default 10000, or DEHNKIT_CAP)
    #[arg(long)]
    cap: Option<usize>,
    /// Genus for --iso-homological when reading a file
    #[arg(long)]
    genus: Option<usize>,
    /// Check the chain identities (genus 3 only)
    #[arg(long)]
    verify_lemmas: bool,
    /// Check the 35 x 7 products table (genus 3 only)
    #[arg(long)]
    verify_table1: bool,
    /// Check the closure set covers the quandle (genus 3 only)
    #[arg(long)]
    closure: bool,
    /// Compare with the mod-2 homological quandle
    #[arg(long)]
    iso_homological: bool,
    /// Print one witness word per element
    #[arg(long)]
    witnesses: bool,
    /// Write the completed table as JSON
    #[arg(long)]
    out: Option<PathBuf>,
}

fn load(args: &CompleteArgs) -> Result<(InvPresentation, Option<usize>), crate::report::UsageError> {
    match (&args.preset, &args.file) {
        (Some(p), _) => {
            let g: usize = p
                .strip_prefix("humphries")
                .and_then(|g| g.parse().ok())
                .filter(|&g| g >= 1)
                .ok_or_else(|| usage(format!("unknown presentation preset {p:?}")))?;
            Ok((humphries(g), Some(g)))
        }
        (None, Some(path)) => Ok((parse_presentation(&read(path)?)?, args.genus)),
        (None, None) => Err(usage("complete needs --preset or --file")),
    }
}

pub fn run(args: &CompleteArgs) -> CmdResult {
    let (pres, genus) = load(args)?;
    let cap = match args.cap {
        Some(c) => c,
        None => cap(DEFAULT_CAP)?,
    };
    let c = complete(&pres, cap)?;
    let mut ok = true;
    let mut text = format!("size {}\n", c.size());
    let mut body = json!({ "size": c.size(), "generators": c.generators() });

    if args.verify_table1 {
        let r = verify_table1(&c)?;
        ok &= r.all_match();
        let matched = r.cells_checked - r.mismatches.len();
        text.push_str(&format!("table1: {matched}/{} cells match ({} rows)\n", r.cells_checked, r.rows));
        for m in &r.mismatches {
            text.push_str(&format!("  mismatch {} * a_{}: expected {}, got {}\n", m.row, m.column, m.expected, m.computed));
        }
        body["table1"] = json!(r);
    }
    if args.verify_lemmas {
        let r = verify_lemma_identities(&c)?;
        ok &= r.all_hold();
        let held = r.instances.iter().filter(|i| i.holds).count();
        text.push_str(&format!("lemmas: {held}/{} instances hold\n", r.instances.len()));
        for f in r.failures() {
            text.push_str(&format!("  fails {}{}\n", f.name, f.x.as_ref().map(|x| format!(" at x = {x}")).unwrap_or_default()));
        }
        body["lemmas"] = json!({ "instances": r.instances.len(), "holding": held, "failures": r.failures().collect::<Vec<_>>() });
    }
    if args.closure {
        let r = closure_sets(&c)?;
        ok &= r.covers();
        text.push_str(&format!(
            "closure: |A| = {}, |B| = {}, |C| = {}, union {}, closed {}\n",
            r.a,
            r.b,
            r.c,
            r.union,
            yes_no(r.closed)
        ));
        body["closure"] = json!(r);
    }
    if args.iso_homological {
        let g = genus.ok_or_else(|| usage("--iso-homological on a file needs --genus"))?;
        let iso = quotient_iso_to_homological(&c, g)?;
        ok &= iso.is_some();
        text.push_str(&format!("isomorphic to hquandle({g}, 2): {}\n", yes_no(iso.is_some())));
        body["homological"] = json!({ "genus": g, "isomorphic": iso.is_some(), "map": iso });
    }
    if args.witnesses {
        text.push_str(&c.witness_listing());
    }
    let labels: Vec<String> = (0..c.size()).map(|x| c.quandle().label(x)).collect();
    body["witnesses"] = json!(labels);
    if let Some(path) = &args.out {
        fs::write(path, c.quandle().to_json() + "\n")
            .map_err(|e| usage(format!("cannot write {}: {e}", path.display())))?;
        body["out"] = Value::String(path.display().to_string());
    }
    Ok(Report::new(ok, text, body))
}
