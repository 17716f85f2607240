//! Relators of `M(N_{g,1})` and the closed-surface extensions.

use crate::presentation::{Relator, Variant};

use super::{a_run, b_seq_top, braids, commutes, eq};

pub(crate) fn relators(g: u32, s: u8, variant: Variant) -> Vec<Relator> {
    let mut out = boundary_relators(g);
    if s == 0 {
        out.extend(closed_relators(g, variant));
    }
    out
}

fn boundary_relators(g: u32) -> Vec<Relator> {
    let mut out = Vec::new();
    if g >= 4 {
        for i in 1..g {
            for j in i + 2..g {
                out.push(commutes(
                    &format!("A1[i={i},j={j}]"),
                    &format!("a{i}"),
                    &format!("a{j}"),
                ));
            }
        }
    }
    for i in 1..g - 1 {
        out.push(braids(
            &format!("A2[i={i}]"),
            &format!("a{i}"),
            &format!("a{}", i + 1),
        ));
    }
    if g >= 4 {
        for i in (1..g).filter(|&i| i != 4) {
            out.push(commutes(&format!("A3[i={i}]"), &format!("a{i}"), "b"));
        }
    }
    if g >= 5 {
        out.push(braids("A4", "b", "a4"));
        out.push(eq("A5", "(a2 a3 a4 b)^10", "(a1 a2 a3 a4 b)^6"));
    }
    if g >= 7 {
        out.push(eq("A6", "(a2 a3 a4 a5 a6 b)^12", "(a1 a2 a3 a4 a5 a6 b)^9"));
    }
    if g >= 4 {
        let x = "(a2 a3 a1 a2 y a2^-1 a1^-1 a3^-1 a2^-1)";
        out.push(eq("B1", &format!("y {x}"), &format!("{x} y")));
    }
    let t = "(a2 a1 y^-1 a2^-1 y a1 a2)";
    out.push(eq("B2", &format!("y {t} y"), &format!("a1 {t} a1")));
    if g >= 4 {
        for i in 3..g {
            out.push(commutes(&format!("B3[i={i}]"), &format!("a{i}"), "y"));
        }
    }
    out.push(eq("B4", "a2 (y a2 y^-1)", "(y a2 y^-1) a2"));
    out.push(eq("B5", "y a1", "a1^-1 y"));
    if g >= 4 {
        out.push(eq(
            "B6",
            "b y b y^-1",
            "(a1 a2 a3 (y^-1 a2 y) a3^-1 a2^-1 a1^-1) (a2^-1 a3^-1 (y a2 y^-1) a3 a2)",
        ));
    }
    if g >= 6 {
        let x = "(a4 a5 a3 a4 a2 a3 a1 a2 y a2^-1 a1^-1 a3^-1 a2^-1 a4^-1 a3^-1 a5^-1 a4^-1)";
        out.push(eq("B7", &format!("{x} b"), &format!("b {x}")));
    }
    if g >= 5 {
        out.push(eq(
            "B8",
            "((y a1^-1 a2^-1 a3^-1 a4^-1) b (a4 a3 a2 a1 y^-1)) ((a1^-1 a2^-1 a3^-1 a4^-1) b^-1 (a4 a3 a2 a1))",
            "((a4^-1 a3^-1 a2^-1) y (a2 a3 a4)) (a3^-1 a2^-1 y^-1 a2 a3) (a2^-1 y a2) y^-1",
        ));
    }
    if let Some(top) = b_seq_top(g) {
        out.push(eq("A7[i=0]", "b0", "a1"));
        out.push(eq("A7[i=1]", "b1", "b"));
        for i in 1..=(g - 4) / 2 {
            let run = format!("b{} {}", i - 1, a_run(2 * i, 2 * i + 3));
            out.push(eq(
                &format!("A8[i={i}]"),
                &format!("b{}", i + 1),
                &format!("({run} b{i})^5 ({run})^-6"),
            ));
        }
        if g == 6 {
            out.push(commutes("A9a", "b2", "b"));
        } else {
            out.push(commutes("A9b", &format!("b{top}"), &format!("a{}", g - 5)));
        }
    }
    out
}

fn closed_relators(g: u32, variant: Variant) -> Vec<Relator> {
    let mut out = Vec::new();
    let chain = format!("({})^{g}", a_run(1, g - 1));
    if g % 2 == 1 {
        out.push(eq("C1a", &chain, "r"));
    } else {
        out.push(eq("C1b", &chain, "1"));
    }
    let tail = a_run(2, g - 1);
    match variant {
        Variant::UwF => {
            out.push(eq("C3", "r^2", "1"));
            for i in 1..g {
                out.push(commutes(&format!("C2[i={i}]"), "r", &format!("a{i}")));
            }
            out.push(eq("C5", "y r", "r y^-1"));
            out.push(eq("C4", &format!("(y r {tail})^{}", g - 1), "1"));
        }
        _ => {
            out.push(commutes("C2_1", "r", "a1"));
            out.push(eq("C3", "r^2", "1"));
            let pair = format!("y^-1 {tail} y {tail}");
            if g % 2 == 1 {
                out.push(eq("C4a", &format!("({pair})^{}", (g - 1) / 2), "1"));
            } else {
                out.push(eq(
                    "C4b",
                    &format!("({pair})^{} y^-1 {tail}", (g - 2) / 2),
                    "r",
                ));
            }
        }
    }
    out
}
