//! Presentation file formats: JSON (read and write), GAP and Magma (write).

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::presentation::{ascii_label, normalize_label, Meta, Presentation, Provenance, Relator};
use crate::symbol::GeneratorSymbol;
use crate::word::Word;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Gap,
    Magma,
}

impl std::str::FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "json" => Ok(Format::Json),
            "gap" => Ok(Format::Gap),
            "magma" => Ok(Format::Magma),
            _ => Err(Error::InvalidKey(format!("unknown format {s:?}"))),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct PresentationJson {
    meta: Meta,
    generators: Vec<String>,
    relators: Vec<RelatorJson>,
}

#[derive(Serialize, Deserialize)]
struct RelatorJson {
    label: String,
    word: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    provenance: Option<Provenance>,
}

pub fn serialize(p: &Presentation, format: Format) -> String {
    match format {
        Format::Json => to_json(p),
        Format::Gap => to_gap(p),
        Format::Magma => to_magma(p),
    }
}

pub fn to_json(p: &Presentation) -> String {
    let doc = PresentationJson {
        meta: p.meta,
        generators: p.generators().iter().map(|g| g.to_string()).collect(),
        relators: p
            .relators()
            .iter()
            .map(|r| RelatorJson {
                label: r.label.clone(),
                word: r.word.to_string(),
                provenance: r.provenance.clone(),
            })
            .collect(),
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("presentation serializes");
    s.push('\n');
    s
}

pub fn parse_json(text: &str) -> Result<Presentation, Error> {
    let doc: PresentationJson = serde_json::from_str(text)?;
    let generators = doc
        .generators
        .iter()
        .map(|g| g.parse::<GeneratorSymbol>())
        .collect::<Result<Vec<_>, _>>()?;
    let mut relators = Vec::with_capacity(doc.relators.len());
    for (i, r) in doc.relators.into_iter().enumerate() {
        let word: Word = r.word.parse().map_err(|e| match e {
            Error::Parse { offset, message } => Error::Parse {
                offset,
                message: format!("relator #{i} ({}): {message}", r.label),
            },
            other => other,
        })?;
        relators.push(Relator {
            label: normalize_label(&r.label),
            word,
            provenance: r.provenance,
        });
    }
    Presentation::new(doc.meta, generators, relators)
}

fn gap_word(w: &Word) -> String {
    w.letters()
        .iter()
        .map(|l| {
            if l.inverse {
                format!("{}^-1", l.symbol)
            } else {
                l.symbol.to_string()
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

fn header(p: &Presentation) -> String {
    format!(
        "kind={} g={} s={} variant={}",
        p.meta.kind, p.meta.g, p.meta.s, p.meta.variant
    )
}

pub fn to_gap(p: &Presentation) -> String {
    let mut out = String::new();
    out.push_str(&format!("# {}\n", header(p)));
    let names: Vec<String> = p.generators().iter().map(|g| format!("\"{g}\"")).collect();
    out.push_str(&format!("F := FreeGroup({});;\n", names.join(", ")));
    for (i, g) in p.generators().iter().enumerate() {
        out.push_str(&format!("{g} := F.{};;\n", i + 1));
    }
    let rels: Vec<&Relator> = p.relators().iter().filter(|r| !r.word.is_empty()).collect();
    out.push_str("G := F / [\n");
    for (i, r) in rels.iter().enumerate() {
        let sep = if i + 1 < rels.len() { "," } else { "" };
        out.push_str(&format!(
            "  {}{}  # {}\n",
            gap_word(&r.word),
            sep,
            ascii_label(&r.label)
        ));
    }
    out.push_str("];;\n");
    out
}

pub fn to_magma(p: &Presentation) -> String {
    let mut out = String::new();
    out.push_str(&format!("// {}\n", header(p)));
    let names: Vec<String> = p.generators().iter().map(|g| g.to_string()).collect();
    let list = names.join(",");
    let rels: Vec<&Relator> = p.relators().iter().filter(|r| !r.word.is_empty()).collect();
    out.push_str(&format!("G<{list}> := Group<{list} |\n"));
    for (i, r) in rels.iter().enumerate() {
        let sep = if i + 1 < rels.len() { "," } else { "" };
        out.push_str(&format!(
            "  {}{}  // {}\n",
            gap_word(&r.word),
            sep,
            ascii_label(&r.label)
        ));
    }
    out.push_str(">;\n");
    out
}
