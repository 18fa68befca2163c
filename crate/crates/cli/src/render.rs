use clap::ValueEnum;
use hkmoduli_core::moduli::{ModuliReport, Witness};
use hkmoduli_core::{BundleStatus, ModuliQuery, SurfaceKind};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Human,
    Json,
    Csv,
}

/// Column order of `table --format csv` (and of `check --format csv`).
pub const CSV_HEADER: [&str; 11] = [
    "family", "n", "d", "t", "non_empty", "components", "bpf", "va", "witness_a", "witness_b", "witness_e",
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleCheck {
    pub witnesses_found: usize,
    pub non_empty: bool,
    pub contains_formula_witness: bool,
    pub agrees: bool,
}

impl OracleCheck {
    pub fn new(report: &ModuliReport, found: &[Witness]) -> Self {
        let contains = report.witness.is_none_or(|w| found.contains(&w));
        let non_empty = !found.is_empty();
        OracleCheck {
            witnesses_found: found.len(),
            non_empty,
            contains_formula_witness: contains,
            agrees: contains && non_empty == report.non_empty,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutput {
    #[serde(flatten)]
    pub report: ModuliReport,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleCheck>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessOutput {
    #[serde(flatten)]
    pub query: ModuliQuery,
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_witnesses: Option<Vec<Witness>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KvaOutput {
    pub surface: SurfaceKind,
    pub a: i64,
    pub e: i64,
    pub k_max: i64,
    pub base_point_free: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub induced: Option<BundleStatus>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub family: String,
    pub n: i64,
    pub d: i64,
    pub t: i64,
    pub non_empty: bool,
    pub components: i64,
    pub bpf: bool,
    pub va: bool,
    pub witness_a: Option<i64>,
    pub witness_b: Option<i64>,
    pub witness_e: Option<i64>,
}

impl From<ModuliReport> for TableRow {
    fn from(r: ModuliReport) -> Self {
        TableRow {
            family: r.family.flag().to_string(),
            n: r.n,
            d: r.d,
            t: r.t,
            non_empty: r.non_empty,
            components: r.components,
            bpf: r.bpf_some_component,
            va: r.va_some_component,
            witness_a: r.witness.map(|w| w.a),
            witness_b: r.witness.map(|w| w.b),
            witness_e: r.witness.map(|w| w.e),
        }
    }
}

impl TableRow {
    fn cells(&self) -> Vec<String> {
        let flag = |b: bool| if b { "1" } else { "0" }.to_string();
        let opt = |x: Option<i64>| x.map(|v| v.to_string()).unwrap_or_default();
        vec![
            self.family.clone(),
            self.n.to_string(),
            self.d.to_string(),
            self.t.to_string(),
            flag(self.non_empty),
            self.components.to_string(),
            flag(self.bpf),
            flag(self.va),
            opt(self.witness_a),
            opt(self.witness_b),
            opt(self.witness_e),
        ]
    }
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable output");
    s.push('\n');
    s
}

fn csv_of(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 csv")
}

fn key_values(pairs: &[(&str, String)]) -> String {
    let width = pairs.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    pairs.iter().map(|(k, v)| format!("{k:<width$}  {v}\n")).collect()
}

fn witness_text(w: Option<Witness>) -> String {
    match w {
        Some(w) => format!("a={} b={} e={}", w.a, w.b, w.e),
        None => "none".into(),
    }
}

pub fn check(out: &CheckOutput, format: OutputFormat) -> String {
    let r = &out.report;
    match format {
        OutputFormat::Json => json(out),
        OutputFormat::Csv => csv_of(&CSV_HEADER, &[TableRow::from(r.clone()).cells()]),
        OutputFormat::Human => {
            let mut pairs = vec![
                ("query", format!("{}(n={}, d={}, t={})", r.family, r.n, r.d, r.t)),
                ("non_empty", r.non_empty.to_string()),
                ("components", r.components.to_string()),
                ("witness", witness_text(r.witness)),
                ("bpf_some_component", r.bpf_some_component.to_string()),
                ("va_some_component", r.va_some_component.to_string()),
                ("bpf_bound", format!("{} (d_min_bpf = {})", r.bpf_bound, r.d_min_bpf)),
                ("va_bound", format!("{} (d_min_va = {})", r.va_bound, r.d_min_va)),
                ("fujita_power", r.fujita_power.to_string()),
                ("applies_to_all_components", r.applies_to_all_components.to_string()),
                ("prime_power_connected", r.prime_power_connected.to_string()),
            ];
            if let Some(o) = &out.oracle {
                pairs.push((
                    "oracle",
                    format!(
                        "{} classes found, {}",
                        o.witnesses_found,
                        if o.agrees { "agrees" } else { "DISAGREES" }
                    ),
                ));
            }
            let mut text = key_values(&pairs);
            for note in r.threshold_notes.iter().chain(&r.diagnostics) {
                text.push_str(&format!("  - {note}\n"));
            }
            text
        }
    }
}

pub fn witness(out: &WitnessOutput, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => json(out),
        OutputFormat::Csv => {
            let row = |source: &str, w: &Witness| {
                vec![source.to_string(), w.a.to_string(), w.b.to_string(), w.e.to_string()]
            };
            let mut rows: Vec<_> = out.witness.iter().map(|w| row("formula", w)).collect();
            for w in out.oracle_witnesses.iter().flatten() {
                rows.push(row("oracle", w));
            }
            csv_of(&["source", "a", "b", "e"], &rows)
        }
        OutputFormat::Human => {
            let mut text = key_values(&[
                ("query", out.query.to_string()),
                ("witness", witness_text(out.witness)),
            ]);
            if let Some(found) = &out.oracle_witnesses {
                text.push_str(&format!("oracle: {} classes\n", found.len()));
                for w in found {
                    text.push_str(&format!("  {}\n", witness_text(Some(*w))));
                }
            }
            text
        }
    }
}

pub fn kva(out: &KvaOutput, format: OutputFormat) -> String {
    let surface = match out.surface {
        SurfaceKind::K3Surface => "k3",
        SurfaceKind::AbelianSurface => "abelian",
    };
    match format {
        OutputFormat::Json => json(out),
        OutputFormat::Csv => {
            let opt = |x: Option<String>| x.unwrap_or_default();
            let row = vec![
                surface.to_string(),
                out.a.to_string(),
                out.e.to_string(),
                out.k_max.to_string(),
                out.base_point_free.to_string(),
                opt(out.n.map(|n| n.to_string())),
                opt(out.induced.map(|s| s.bpf.to_string())),
                opt(out.induced.map(|s| s.very_ample.to_string())),
            ];
            csv_of(&["surface", "a", "e", "k_max", "base_point_free", "n", "bpf", "very_ample"], &[row])
        }
        OutputFormat::Human => {
            let k = if out.k_max < 0 {
                format!("{} (not base point free)", out.k_max)
            } else {
                out.k_max.to_string()
            };
            let mut pairs = vec![("surface", surface.to_string()), ("k_max", k)];
            if let (Some(n), Some(st)) = (out.n, out.induced) {
                pairs.push(("n", n.to_string()));
                pairs.push(("bpf", st.bpf.to_string()));
                pairs.push(("very_ample", st.very_ample.to_string()));
            }
            key_values(&pairs)
        }
    }
}

pub fn table(rows: &[TableRow], format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => json(&rows),
        OutputFormat::Csv => csv_of(&CSV_HEADER, &rows.iter().map(TableRow::cells).collect::<Vec<_>>()),
        OutputFormat::Human => {
            let cells: Vec<_> = rows.iter().map(TableRow::cells).collect();
            let widths: Vec<usize> = (0..CSV_HEADER.len())
                .map(|i| cells.iter().map(|r| r[i].len()).chain([CSV_HEADER[i].len()]).max().unwrap_or(0))
                .collect();
            let line = |row: &[String]| {
                let mut s = row
                    .iter()
                    .zip(&widths)
                    .map(|(c, &w)| format!("{c:>w$}"))
                    .collect::<Vec<_>>()
                    .join("  ");
                s.push('\n');
                s
            };
            let header: Vec<String> = CSV_HEADER.iter().map(|h| h.to_string()).collect();
            std::iter::once(line(&header)).chain(cells.iter().map(|r| line(r))).collect()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use hkmoduli_core::{moduli, Family};

    #[test]
    fn check_json_round_trips() {
        for (family, n, d, t) in [(Family::K3Hilb, 2, 3, 2), (Family::Kummer, 4, 17, 5), (Family::K3Hilb, 10, 27, 3)] {
            let q = ModuliQuery::new(family, n, d, t).unwrap();
            let out = CheckOutput { report: moduli::report(&q).unwrap(), oracle: None };
            let text = check(&out, OutputFormat::Json);
            let parsed: CheckOutput = serde_json::from_str(&text).unwrap();
            assert_eq!(parsed, out);
            assert_eq!(check(&parsed, OutputFormat::Json), text);
        }
    }

    #[test]
    fn csv_row_matches_header() {
        let q = ModuliQuery::new(Family::K3Hilb, 2, 3, 2).unwrap();
        let row = TableRow::from(moduli::report(&q).unwrap()).cells();
        assert_eq!(row.len(), CSV_HEADER.len());
        assert_eq!(row, ["k3n", "2", "3", "2", "1", "1", "0", "0", "2", "1", "1"]);
    }
}
