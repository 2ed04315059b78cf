//! Key-value rendering shared by the `ring`, `invariants` and `catalog`
//! subcommands. `human` aligns `key: value`; `records` is `key TAB value`.

use std::io::Write;

use unitgraph::invariants::{Bipartiteness, Chromatic, CliqueValue, InvariantReport, Multipartite};
use unitgraph::ring::{AxiomCheck, AxiomViolation, Element, FiniteRing};
use unitgraph::structure::StructureReport;

use crate::Format;

/// Sets longer than this print their first few members and a count.
const LIST_LIMIT: usize = 32;
const PREVIEW: usize = 8;

pub struct Records {
    rows: Vec<(&'static str, String)>,
}

/// Elements by label (`human`) or by index (`records`).
struct Sets<'a> {
    ring: &'a FiniteRing,
    labels: bool,
}

impl Sets<'_> {
    fn element(&self, x: Element) -> String {
        if self.labels {
            self.ring.label(x)
        } else {
            x.to_string()
        }
    }

    fn set(&self, xs: &[Element]) -> String {
        let shown = if xs.len() > LIST_LIMIT { &xs[..PREVIEW] } else { xs };
        let items: Vec<String> = shown.iter().map(|&x| self.element(x)).collect();
        if xs.len() > LIST_LIMIT {
            format!("{{{},...}} ({} elements)", items.join(","), xs.len())
        } else {
            format!("{{{}}}", items.join(","))
        }
    }

    fn partition(&self, parts: &[Vec<Element>]) -> String {
        let total: usize = parts.iter().map(Vec::len).sum();
        if total > LIST_LIMIT {
            let sizes: Vec<String> = parts.iter().map(|p| p.len().to_string()).collect();
            return format!("{} parts of sizes {}", parts.len(), sizes.join(","));
        }
        parts.iter().map(|p| self.set(p)).collect::<Vec<_>>().join(" ")
    }
}

fn yes(b: bool) -> String {
    b.to_string()
}

impl Records {
    pub fn structure(
        r: &FiniteRing,
        s: &StructureReport,
        axioms: &Result<AxiomCheck, AxiomViolation>,
        labels: bool,
    ) -> Records {
        let sets = Sets { ring: r, labels };
        let units: Vec<Element> = r.elements().filter(|&x| r.is_unit(x)).collect();
        let unknown = || "unknown (above the ideal enumeration cap)".to_string();
        let maximal = match &s.maximal_left_ideals {
            Some(m) if m.iter().map(|i| i.len()).sum::<usize>() <= LIST_LIMIT => {
                let listed: Vec<String> = m.iter().map(|i| sets.set(&i.to_vec())).collect();
                format!("{} {}", m.len(), listed.join(" "))
            }
            Some(m) => {
                let sizes: Vec<String> = m.iter().map(|i| i.len().to_string()).collect();
                format!("{} of sizes {}", m.len(), sizes.join(","))
            }
            None => unknown(),
        };
        let rows = vec![
            ("ring", r.name().to_string()),
            ("order", s.order.to_string()),
            ("units", s.unit_count.to_string()),
            ("unit_set", sets.set(&units)),
            ("commutative", yes(s.commutative)),
            ("radical", sets.set(&s.radical.to_vec())),
            (
                "radical_nilpotency_index",
                s.radical_nilpotency_index
                    .as_ref()
                    .map_or_else(|e| e.to_string(), |i| i.to_string()),
            ),
            ("maximal_left_ideals", maximal),
            ("local", s.is_local.map_or_else(unknown, yes)),
            (
                "residue_field_order",
                s.residue_field_order.map_or("-".to_string(), |q| q.to_string()),
            ),
            ("division", yes(s.is_division)),
            ("field", yes(s.is_field)),
            ("two_is_unit", yes(s.two_is_unit)),
            (
                "radical_cross_check",
                s.radical_cross_check.map_or_else(unknown, |ok| if ok { "agrees" } else { "DISAGREES" }.to_string()),
            ),
            (
                "axioms",
                match axioms {
                    Ok(AxiomCheck::Exhaustive { triples }) => format!("hold (all {triples} triples)"),
                    Ok(AxiomCheck::Sampled { triples, seed }) => {
                        format!("hold ({triples} sampled triples, seed {seed})")
                    }
                    Err(v) => format!("VIOLATED: {v}"),
                },
            ),
        ];
        Records { rows }
    }

    pub fn invariants(r: &FiniteRing, inv: &InvariantReport, labels: bool) -> Records {
        let sets = Sets { ring: r, labels };
        let bound = |c: &CliqueValue| {
            if c.exact {
                c.value().to_string()
            } else {
                format!(">= {} (budget exceeded)", c.value())
            }
        };
        let mut rows = vec![
            ("ring", r.name().to_string()),
            ("vertices", r.order().to_string()),
            ("omega", bound(&inv.omega)),
            ("clique", sets.set(&inv.omega.witness)),
            ("alpha", bound(&inv.alpha)),
            ("coclique", sets.set(&inv.alpha.witness)),
        ];
        match &inv.chi {
            Chromatic::Exact { chi, .. } => rows.push(("chi", chi.to_string())),
            Chromatic::Bounds { lower, upper, .. } => {
                rows.push(("chi", format!("[{lower}, {upper}] (not exact)")));
            }
        }
        rows.push(("bipartite", yes(inv.bipartite.is_bipartite())));
        match &inv.bipartite {
            Bipartiteness::Bipartite { parts } => rows.push(("bipartition", sets.partition(parts))),
            Bipartiteness::OddCycle(c) => {
                let path: Vec<String> = c.iter().map(|&x| sets.element(x)).collect();
                rows.push(("odd_cycle", path.join("-")));
            }
        }
        rows.push(("complete_multipartite", yes(inv.multipartite.is_complete())));
        match &inv.multipartite {
            Multipartite::Complete { parts } => {
                rows.push(("r", parts.len().to_string()));
                rows.push(("parts", sets.partition(parts)));
            }
            Multipartite::NotComplete { triple } => {
                let t: Vec<String> = triple.iter().map(|&x| sets.element(x)).collect();
                rows.push(("intransitive_triple", format!("({})", t.join(","))));
            }
        }
        Records { rows }
    }

    pub fn write(&self, out: &mut impl Write, format: Format) {
        let width = self.rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        for (k, v) in &self.rows {
            match format {
                Format::Records => writeln!(out, "{k}\t{v}"),
                _ => writeln!(out, "{:width$}  {v}", format!("{k}:"), width = width + 1),
            }
            .ok();
        }
    }
}

/// Table rows: aligned columns for `human`, TAB-separated for `records`.
pub fn write_rows<const N: usize>(out: &mut impl Write, rows: &[[String; N]], format: Format) {
    let mut widths = [0usize; N];
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    for row in rows {
        let line = match format {
            Format::Records => row.join("\t"),
            _ => {
                let cells: Vec<String> = row
                    .iter()
                    .zip(widths)
                    .enumerate()
                    .map(|(i, (c, w))| if i + 1 == N { c.clone() } else { format!("{c:w$}") })
                    .collect();
                cells.join("  ")
            }
        };
        writeln!(out, "{line}").ok();
    }
}
