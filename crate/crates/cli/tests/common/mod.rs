//! Helpers shared by the CLI integration tests and the acceptance harness.
#![allow(dead_code)]

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Stdio};

use tdde_core::numerics::{lasso_fit, DenseMatrix};

pub struct Run {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn tdde(args: &[&str], stdin: Option<&str>) -> Run {
    let mut child = Command::new(env!("CARGO_BIN_EXE_tdde"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn tdde");
    {
        let mut pipe = child.stdin.take().unwrap();
        if let Some(input) = stdin {
            pipe.write_all(input.as_bytes()).unwrap();
        }
    }
    let out = child.wait_with_output().unwrap();
    Run {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

pub fn fixture_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests").join("fixtures")
}

pub const FIXTURES: [&str; 3] = ["journals_3", "journals_5", "journals_8"];

/// printf-style `%.12g`, written independently of the binary.
pub fn g12(v: f64) -> String {
    if v == 0.0 {
        return "0".into();
    }
    let s = format!("{:.11e}", v);
    let (m, e) = s.split_once('e').unwrap();
    let e: i32 = e.parse().unwrap();
    let trim = |s: String| -> String {
        if s.contains('.') {
            s.trim_end_matches('0').trim_end_matches('.').to_string()
        } else {
            s
        }
    };
    if (-4..12).contains(&e) {
        trim(format!("{:.*}", (11 - e) as usize, v))
    } else {
        format!("{}e{}{:02}", trim(m.to_string()), if e < 0 { "-" } else { "+" }, e.abs())
    }
}

pub struct Table {
    pub journals: Vec<String>,
    pub features: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

pub fn read_table(path: &Path) -> Table {
    let mut rdr = csv::Reader::from_path(path).unwrap();
    let features: Vec<String> = rdr.headers().unwrap().iter().skip(1).map(String::from).collect();
    let mut journals = Vec::new();
    let mut rows = Vec::new();
    for rec in rdr.records() {
        let rec = rec.unwrap();
        journals.push(rec[0].to_string());
        rows.push(rec.iter().skip(1).map(|v| v.parse().unwrap()).collect());
    }
    Table { journals, features, rows }
}

/// Elimination loop written out longhand: returns `(journal index, step, singval)`
/// in elimination order.
pub fn brute_force_rank(rows: &[Vec<f64>], target: usize, lambda: f64) -> Vec<(usize, usize, f64)> {
    let n = rows[0].len();
    let mut alive: Vec<usize> = (0..rows.len()).collect();
    let mut out = Vec::new();
    let mut singval = 0.0;
    while alive.len() > 1 {
        let k = alive.len() as f64;
        let mut z: Vec<Vec<f64>> = alive.iter().map(|&i| rows[i].clone()).collect();
        for c in 0..n {
            let mean = z.iter().map(|r| r[c]).sum::<f64>() / k;
            let sd = (z.iter().map(|r| (r[c] - mean) * (r[c] - mean)).sum::<f64>() / k).sqrt();
            assert!(sd > 0.0, "constant column in fixture");
            for r in z.iter_mut() {
                r[c] = (r[c] - mean) / sd;
            }
        }
        let y: Vec<f64> = z.iter().map(|r| r[target]).collect();
        let x: Vec<Vec<f64>> = z
            .iter()
            .map(|r| (0..n).filter(|&c| c != target).map(|c| r[c]).collect())
            .collect();
        let w = lasso_fit(&DenseMatrix::from_rows(&x).unwrap(), &y, lambda).unwrap();
        singval = w.iter().map(|v| v * v).sum::<f64>().sqrt();
        let row_norm = w.iter().map(|v| v.abs()).sum::<f64>() / (n - 1) as f64;
        let mut best = (f64::INFINITY, 0);
        for (j, r) in z.iter().enumerate() {
            let col_norm = r.iter().map(|v| v.abs()).sum::<f64>() / n as f64;
            let gap = (col_norm - row_norm).abs();
            if gap < best.0 {
                best = (gap, j);
            }
        }
        out.push((alive.remove(best.1), out.len() + 1, singval));
    }
    out.push((alive[0], rows.len(), singval));
    out
}

fn quote(name: &str) -> String {
    if name.contains([',', '"', '\n', '\r']) {
        format!("\"{}\"", name.replace('"', "\"\""))
    } else {
        name.to_string()
    }
}

/// Expected `tdde rank` output for a table.
pub fn brute_force_csv(table: &Table, response: &str, lambda: f64) -> String {
    let target = table.features.iter().position(|f| f == response).unwrap();
    let mut order = brute_force_rank(&table.rows, target, lambda);
    order.sort_by(|a, b| a.2.partial_cmp(&b.2).unwrap().then(a.1.cmp(&b.1)));
    let mut s = String::from("rank,journal,singval,elimination_step\n");
    for (rank, (j, step, sv)) in order.iter().enumerate() {
        s.push_str(&format!("{},{},{},{}\n", rank + 1, quote(&table.journals[*j]), g12(*sv), step));
    }
    s
}

pub fn golden_path(name: &str) -> PathBuf {
    fixture_dir().join(format!("{name}.rank.golden.csv"))
}

/// Writes goldens from the brute-force oracle when `UPDATE_GOLDEN=1`.
pub fn maybe_update_goldens() {
    if std::env::var("UPDATE_GOLDEN").as_deref() != Ok("1") {
        return;
    }
    for name in FIXTURES {
        let table = read_table(&fixture_dir().join(format!("{name}.csv")));
        std::fs::write(golden_path(name), brute_force_csv(&table, "CiteScore", 0.1)).unwrap();
    }
}
