//! Relators of `T(N_{g,1})` and the closed-surface extensions.
//!
//! The reduced variant lists exactly the printed relations with their
//! printed ranges. The full variant adds relations shown to be superfluous:
//! (D1), (B̄1₂), (B̄3) for the remaining indices, and (Ā4), (Ā5), (Ā6),
//! (B̄6₂), (B̄8₂) beyond their printed ranges; with `s = 0` it also keeps the
//! relators that the closed case makes redundant.

use crate::presentation::{Relator, Variant};

use super::words::z_text;
use super::{a_run, b_seq_top, braids, commutes, eq, mcg};

pub(crate) fn relators(g: u32, s: u8, variant: Variant) -> Vec<Relator> {
    let full = variant == Variant::Full;
    let mut out = boundary_relators(g, full);
    if s == 0 {
        let dropped: &[&str] = match (full, g % 2) {
            (true, _) => &[],
            (false, 1) => &["Abar1_2", "Bbar2_2", "Bbar4_2"],
            (false, _) => &["Abar1_1", "Abar2_1", "Abar2_2"],
        };
        let dropped: Vec<String> = dropped
            .iter()
            .map(|l| crate::presentation::normalize_label(l))
            .collect();
        out.retain(|r| {
            let family = r.label.split('[').next().unwrap_or("");
            !dropped.iter().any(|d| d == family)
        });
        out.extend(closed_relators(g));
    }
    out
}

/// `(A1)`..`(A9b)`: the relators of the ambient group free of `y`.
fn ambient_twist_free(g: u32) -> Vec<Relator> {
    mcg::relators(g, 1, Variant::Standard)
        .into_iter()
        .filter(|r| r.label.starts_with('A'))
        .collect()
}

const B1_BLOCK: &str = "a2 a3 a1 a2";
const B2_E: &str = "a2 a1 e a1 a2 a1 a2 a1 a2 f a1 a2";
const B2_F: &str = "a2 a1 f a1 a2 a1 a2 a1 a2 e a1 a2";
const B7_Q: &str = "a4 a5 a3 a4 a2 a3 a1 a2";
const B7_P: &str = "a2^-1 a1^-1 a3^-1 a2^-1 a4^-1 a3^-1 a5^-1 a4^-1";

fn boundary_relators(g: u32, full: bool) -> Vec<Relator> {
    let mut out = ambient_twist_free(g);
    if g >= 5 {
        for j in 4..g {
            out.push(commutes(&format!("Abar1_1[j={j}]"), "e", &format!("a{j}")));
        }
        for j in 4..g {
            out.push(commutes(&format!("Abar1_2[j={j}]"), "f", &format!("a{j}")));
        }
    }
    out.push(braids("Abar2_1", "a1", "e"));
    if g >= 4 {
        out.push(braids("Abar2_2", "a3^-1", "e"));
    }
    out.push(braids("Abar2_3", "a1", "f"));
    if g == 4 || g == 5 {
        out.push(commutes("Abar3_1", "a1", "c"));
        out.push(commutes("Abar3_2", "e", "c"));
    }
    let in_range = |lo: u32, hi: u32| g >= lo && (full || g <= hi);
    if in_range(5, 6) {
        out.push(braids("Abar4", "c", "a4"));
        out.push(eq("Abar5", "(e^-1 a3 a4 c)^10", "(a1^-1 e^-1 a3 a4 c)^6"));
    }
    if in_range(7, 8) {
        out.push(eq(
            "Abar6",
            "(e^-1 a3 a4 a5 a6 c)^12",
            "(a1^-1 e^-1 a3 a4 a5 a6 c)^9",
        ));
    }
    if g >= 4 {
        out.push(eq(
            "Bbar1",
            &format!("({B1_BLOCK} e a1 a3^-1 e) ({B1_BLOCK} f a1 a3^-1 f)"),
            "1",
        ));
    }
    out.push(eq("Bbar2_1", "u", B2_E));
    out.push(eq("Bbar2_2", &format!("({B2_E}) ({B2_F})"), "1"));
    if g >= 4 {
        out.push(commutes("Bbar3", "u", "a3"));
    }
    out.push(commutes("Bbar4_1", "e", "a2"));
    out.push(commutes("Bbar4_2", "f", "a2"));
    if g >= 4 {
        out.push(eq(
            "Bbar6_1",
            "b c",
            "(a1 a2 a3 f^-1 a3^-1 a2^-1 a1^-1) (a2^-1 a3^-1 e^-1 a3 a2)",
        ));
    }
    if in_range(4, 5) {
        out.push(eq(
            "Bbar6_2",
            "c (u b u^-1)",
            "(a1^-1 e^-1 a3 a2 a3^-1 e a1) (e a3^-1 (u a2 u^-1) a3 e^-1)",
        ));
    }
    if g >= 6 {
        let v = format!("({B7_Q} e a1 a3^-1 e a4^-1 a3^-1 a5^-1 a4^-1)");
        out.push(eq("Bbar7_1", &format!("{v} c"), &format!("b {v}")));
        let x = format!("({B7_P}) b ({B7_Q})");
        out.push(eq("Bbar7_2", &format!("{x} u"), &format!("u {x}")));
    }
    if g >= 5 {
        out.push(eq(
            "Bbar8_1",
            "((a1 e a3^-1 a4^-1) c (a4 a3 e^-1 a1^-1)) ((a1^-1 a2^-1 a3^-1 a4^-1) b^-1 (a4 a3 a2 a1))",
            "a4^-1 ((a3^-1 a2^-1 e^-1 a3) a4 (a3^-1 e a2 a3)) a2^-1 e^-1",
        ));
    }
    if in_range(5, 6) {
        out.push(eq(
            "Bbar8_2",
            "((a1^-1 a2^-1 a3^-1 a4^-1) b (a4 a3 a2 a1)) ((a1 f a3^-1 a4^-1) u^-1 c^-1 u (a4 a3 f^-1 a1^-1))",
            "a4^-1 ((a3^-1 f a2 a3) a4 (a3^-1 a2^-1 f^-1 a3)) f a2",
        ));
    }
    if b_seq_top(g).is_some() {
        out.extend(even_relators(g));
    }
    if full {
        out.push(eq("D1", "f", "u^-1 e u"));
        if g >= 4 {
            out.push(eq(
                "Bbar1_2",
                "u (f^-1 a3 a1^-1 f^-1 a2^-1 a1^-1 a3^-1 a2^-1)",
                &format!("({B1_BLOCK} e a1 a3^-1 e) u"),
            ));
        }
        out.push(commutes("Bbar3[i=1]", "u", "a1"));
        for i in 4..g {
            out.push(commutes(&format!("Bbar3[i={i}]"), "u", &format!("a{i}")));
        }
    }
    out
}

fn even_relators(g: u32) -> Vec<Relator> {
    let mut out = Vec::new();
    let top = (g - 2) / 2;
    if g == 6 {
        out.push(eq("Abar7a[i=0]", "B0", "a1^-1"));
        out.push(eq("Abar7a[i=1]", "B1", "c"));
    }
    if g == 8 {
        out.push(eq("Abar7b", "B1", "c"));
    }
    let z = z_text(g - 1);
    for i in [(g - 6) / 2, (g - 4) / 2] {
        if i >= 2 {
            out.push(eq(
                &format!("Abar7c[i={i}]"),
                &format!("B{i}"),
                &format!("({z}) b{i} ({z})^-1"),
            ));
        }
    }
    if g == 6 {
        out.push(eq(
            "Abar8a",
            "B2",
            "(B0 e^-1 a3 a4 a5 B1)^5 (B0 e^-1 a3 a4 a5)^-6",
        ));
        out.push(commutes("Abar9a", "B2", "c"));
    } else {
        let run = format!("B{} {}", (g - 6) / 2, a_run(g - 4, g - 1));
        out.push(eq(
            "Abar8b",
            &format!("B{top}"),
            &format!("({run} B{})^5 ({run})^-6", (g - 4) / 2),
        ));
        out.push(commutes(
            "Abar9b",
            &format!("B{top}"),
            &format!("a{}", g - 5),
        ));
    }
    out
}

fn closed_relators(g: u32) -> Vec<Relator> {
    let mut out = Vec::new();
    let chain = format!("({})^{g}", a_run(1, g - 1));
    let tail = a_run(2, g - 1);
    if g % 2 == 1 {
        out.push(eq("C1a", &chain, "r"));
        out.push(eq(
            "Cbar1a",
            &format!("(a1^-1 e^-1 {})^{g}", a_run(3, g - 1)),
            "u r",
        ));
        for i in 1..g {
            out.push(commutes(&format!("C2[i={i}]"), &format!("a{i}"), "r"));
        }
        out.push(eq("Cbar2", "r e", "f r"));
        out.push(eq("Cbar5", "r u", "u^-1 r"));
        out.push(eq("C3", "r^2", "1"));
        out.push(eq(
            "Cbar4a",
            &format!("({tail} e^-1 {})^{}", a_run(3, g - 1), (g - 1) / 2),
            "1",
        ));
    } else {
        out.push(eq("C1b", &chain, "1"));
        out.push(eq("Cbar2_1", "R a1", "a1^-1 R"));
        for i in 3..g {
            out.push(commutes(&format!("Cbar2_2[i={i}]"), "R", &format!("a{i}")));
        }
        out.push(eq("Cbar2_3", "R a2", "e^-1 R"));
        out.push(eq("Cbar5", "R u", "u^-1 R"));
        out.push(eq("Cbar3", "R^2", "1"));
        out.push(eq("Cbar4", &format!("(R {tail})^{}", g - 1), "1"));
    }
    out
}

/// Relations established inside the proofs and used by derivation
/// fixtures: (Ā2₄), (Ā3₁) over its wider range, and (B̄7₃).
pub(crate) fn proof_relators(g: u32) -> Vec<Relator> {
    let mut out = Vec::new();
    if g >= 4 {
        out.push(braids("Abar2_4", "a3^-1", "f"));
        for i in (1..g).filter(|&i| i != 2 && i != 4) {
            out.push(commutes(&format!("Abar3_1[i={i}]"), &format!("a{i}"), "c"));
        }
    }
    if g >= 6 {
        let l = format!("(a4 a5 a3 a4 e^-1 a3 a1^-1 e^-1) ({B7_P})");
        out.push(eq("Bbar7_3", &format!("{l} u^-1 c u"), &format!("b {l}")));
    }
    out
}
