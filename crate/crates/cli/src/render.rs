//! Report records (the `--json` payloads) and their text rendering.

use std::fmt::Write;

use horoaut::fan::RootPartition;
use horoaut::horospherical::Extendability;
use horoaut::{AutReport, BundleReport, DemazureRoot, RootKind, ToricAutReport, Weight};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FanRootsOutput {
    pub roots: Vec<DemazureRoot>,
    pub partition: RootPartition,
    pub report: ToricAutReport,
    /// Radius of the brute-force scan that confirmed the root set.
    pub oracle_radius: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HoroAutOutput {
    pub report: AutReport,
    pub extendability: Extendability,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BundleOutput {
    pub report: BundleReport,
    /// The horospherical pipeline was run and agreed.
    pub pipeline_checked: bool,
}

/// ANSI styling, a no-op when color is off.
#[derive(Clone, Copy, Debug)]
pub struct Style {
    pub color: bool,
}

impl Style {
    fn paint(self, code: &str, s: &str) -> String {
        if self.color {
            format!("\x1b[{code}m{s}\x1b[0m")
        } else {
            s.to_string()
        }
    }

    fn head(self, s: &str) -> String {
        self.paint("1", s)
    }

    fn flag(self, b: bool) -> String {
        self.paint(if b { "32" } else { "33" }, &b.to_string())
    }

    fn word(self, s: &str) -> String {
        self.paint("36", s)
    }
}

fn vec_str(v: &[i64]) -> String {
    let parts: Vec<String> = v.iter().map(i64::to_string).collect();
    format!("({})", parts.join(", "))
}

fn weight_str(w: &Weight) -> String {
    if w.torus.is_empty() {
        format!("fw {}", vec_str(&w.fw))
    } else {
        format!("fw {} torus {}", vec_str(&w.fw), vec_str(&w.torus))
    }
}

fn sum_str(v: &[u64]) -> String {
    v.iter().sum::<u64>().to_string()
}

pub fn fan_text(o: &FanRootsOutput, st: Style) -> String {
    let r = &o.report;
    let mut s = String::new();
    let _ = writeln!(s, "{}", st.head(&format!("Demazure roots ({})", o.roots.len())));
    let semi: std::collections::BTreeSet<&DemazureRoot> = o.partition.semisimple.iter().collect();
    for root in &o.roots {
        let kind = if semi.contains(root) { "semisimple" } else { "unipotent" };
        let _ = writeln!(s, "  m = {}  ray {}  {}", vec_str(&root.m), root.ray_index, st.word(kind));
    }
    let _ = writeln!(s, "semisimple: {}, unipotent: {}", r.n_semisimple, r.n_unipotent);
    let _ = writeln!(s, "dim Aut⁰(X) = dim S + |R|");
    let _ = writeln!(s, "{} = {} + {}", st.head(&r.dim_aut.to_string()), r.dim_torus, r.n_roots);
    let _ = writeln!(s, "reductive: {}", st.flag(r.reductive));
    if let Some(radius) = o.oracle_radius {
        let _ = writeln!(s, "oracle: brute-force scan at radius {radius} agrees");
    }
    s
}

pub fn horo_text(o: &HoroAutOutput, st: Style) -> String {
    let r = &o.report;
    let mut s = String::new();
    let _ = writeln!(s, "{}", st.head(&format!("B⁺-roots ({})", r.roots.len())));
    for root in &r.roots {
        let kind = match root.kind {
            RootKind::Semisimple => "semisimple",
            RootKind::Unipotent => "unipotent",
        };
        let _ = writeln!(
            s,
            "  m = {}  ray {}  {}  {}  dim V = {}",
            vec_str(&root.m_fiber),
            root.ray_index,
            st.word(kind),
            weight_str(&root.m_ambient),
            root.v_dim
        );
    }
    let _ = writeln!(s, "dim Aut⁰(X) = dim Aut⁰(G/P) + dim S + |S⁺| + Σ dim V(m)");
    let _ = writeln!(
        s,
        "{} = {} + {} + {} + {}",
        st.head(&r.dim_aut_total.to_string()),
        r.dim_aut_gp,
        r.dim_s,
        r.n_semisimple,
        sum_str(&r.unipotent_dims)
    );
    let _ = writeln!(s, "unipotent radical: {}, Levi: {}", r.dim_unipotent_radical, r.dim_levi);
    let _ = writeln!(s, "reductive: {}", st.flag(r.reductive));
    let e = &o.extendability;
    let _ = writeln!(s, "{}", st.head("fiber roots extending to X"));
    for root in &e.extends {
        let note = if root.g_normalized { "  G-normalized" } else { "" };
        let _ = writeln!(s, "  m = {}  ray {}{}", vec_str(&root.m), root.ray_index, note);
    }
    let _ = writeln!(s, "{}", st.head("fiber roots not extending"));
    for root in &e.does_not_extend {
        let _ = writeln!(s, "  m = {}  ray {}", vec_str(&root.m), root.ray_index);
    }
    let _ = writeln!(s, "g_surjects: {}", st.flag(r.g_surjects));
    if !r.g_surjects {
        let _ = writeln!(
            s,
            "caveat: G does not map onto Aut⁰(G/P); the Levi description holds only after enlarging G"
        );
    }
    s
}

pub fn bundle_text(o: &BundleOutput, st: Style) -> String {
    let r = &o.report;
    let mut s = String::new();
    let _ = writeln!(s, "{}", st.head("pair roots χ_i − χ_j"));
    for p in &r.pair_roots {
        let status = match (p.nef, p.iso) {
            (_, true) => "semisimple",
            (true, false) => "unipotent",
            (false, _) => "absent",
        };
        let dim = p.v_dim.map(|d| format!("  dim V = {d}")).unwrap_or_default();
        let _ = writeln!(s, "  ({}, {})  {}{}", p.i, p.j, st.word(status), dim);
    }
    let _ = writeln!(s, "dim Aut⁰(X) = dim Aut⁰(G/P) + dim S + |S⁺| + Σ dim V(m)");
    let _ = writeln!(
        s,
        "{} = {} + {} + {} + {}",
        st.head(&r.dim_aut_total.to_string()),
        r.dim_aut_gp,
        r.dim_s,
        r.n_semisimple,
        sum_str(&r.unipotent_dims)
    );
    if let Some(i) = r.base_fano_index {
        let _ = writeln!(s, "base Fano index: {i}");
    }
    let _ = writeln!(
        s,
        "fano: {}, reductive: {}, k_unstable: {}",
        st.word(&r.fano.to_string()),
        st.flag(r.reductive),
        st.word(&r.k_unstable.to_string())
    );
    if !r.g_surjects {
        let _ = writeln!(s, "caveat: G does not map onto Aut⁰(G/P)");
    }
    if o.pipeline_checked {
        let _ = writeln!(s, "pipeline: horospherical path agrees");
    }
    s
}
