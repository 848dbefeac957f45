use std::ops::RangeInclusive;

use grot_core::encoding::{
    decompose_space_with, encode, orbit_size_factors, quotient_word, DecomposeMode,
    DecomposeOptions, DEFAULT_SPACE_CAP,
};
use grot_core::orbitstats::{m_table, reassemble, FrequencyTable};
use grot_core::rotation::{extension_trace, index_decomposition, orbit, IndexClass};
use grot_core::sweep::{in_domain, run_sweep, Scope};
use grot_core::toggle::{decompose_x_with, decompose_z, find_snakes, orbit_board, ENUMERATION_CAP};
use grot_core::{BinaryWord, Error, Execution, ToggleWord};
use serde_json::{json, Value};

use crate::output::{envelope, strings, table, Rendered};

/// Default cap on `N` for `X_N` and `Z_N` enumerations.
pub const TOGGLE_CAP: usize = 30;

/// Why a command stopped: bad input (exit 2) or an internal error.
pub enum Failure {
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<Rendered, Failure>;

pub fn orbit_cmd(word: &str, m: usize, with_encoding: bool) -> Outcome {
    let w = BinaryWord::parse(word)?;
    let o = orbit(&w, m)?;
    let mut header = strings(["k", "word"]);
    if with_encoding {
        header.extend(strings(["ore", "rw", "qw", "bqw"]));
    }
    let mut rows = Vec::new();
    let mut json_rows = Vec::new();
    for (k, x) in o.words().iter().enumerate() {
        let mut row = vec![k.to_string(), x.to_string()];
        let mut obj = json!({ "k": k, "word": x.to_string() });
        if with_encoding {
            let p = encode(x, m)?;
            let ore = x.one_run_encoding().to_string();
            let qw = quotient_word(x, m)?.to_string();
            row.extend([ore.clone(), p.rw_string(), qw.clone(), p.bqw().to_string()]);
            obj["ore"] = json!(ore);
            obj["rw"] = json!(p.rw_string());
            obj["qw"] = json!(qw);
            obj["bqw"] = json!(p.bqw().to_string());
        }
        rows.push(row);
        json_rows.push(obj);
    }
    let params = json!({ "word": word, "m": m, "encoding": with_encoding });
    let totals = json!({ "size": o.size() });
    let text = format!("{}\norbit size {}", table(&header, &rows), o.size());
    Ok(Rendered {
        json: envelope("orbit", params, "rows", json_rows, totals),
        text,
        csv_header: header,
        csv_rows: rows,
        failed: false,
    })
}

pub fn freq_cmd(word: &str, m: usize, right: bool, j: Option<usize>) -> Outcome {
    let w = BinaryWord::parse(word)?;
    let o = orbit(&w, m)?;
    let t = if right {
        FrequencyTable::from_orbit_right(&o)
    } else {
        FrequencyTable::from_orbit(&o)
    };
    if let Some(j) = j {
        if j > w.len() {
            return Err(Error::JOutOfRange {
                j,
                lo: 0,
                hi: w.len(),
            }
            .into());
        }
    }
    let cols: Vec<usize> = match j {
        Some(j) => vec![j],
        None => (0..=t.n()).collect(),
    };
    let mut header = vec!["s".to_string()];
    header.extend(cols.iter().map(|c| c.to_string()));
    let mut rows = Vec::new();
    let mut json_rows = Vec::new();
    for s in 0..=t.ones() {
        let counts: Vec<usize> = cols.iter().map(|&c| t.get(s, c)).collect();
        let mut row = vec![s.to_string()];
        row.extend(strings(&counts));
        rows.push(row);
        json_rows.push(json!({ "s": s, "counts": counts }));
    }
    let side = if right { "R" } else { "L" };
    let params = json!({ "word": word, "m": m, "right": right, "j": j });
    let totals = json!({ "orbit_size": o.size(), "ones": t.ones(), "n": t.n() });
    let mut text_header = header.clone();
    text_header[0] = "s\\j".into();
    let text = format!(
        "frequency table of {side}(j) for {word}, m={m} (orbit size {})\n{}",
        o.size(),
        table(&text_header, &rows)
    );
    Ok(Rendered {
        json: envelope("freq", params, "rows", json_rows, totals),
        text,
        csv_header: header,
        csv_rows: rows,
        failed: false,
    })
}

fn class_label(c: IndexClass) -> &'static str {
    c.label()
}

pub fn trace_cmd(word: &str, m: usize, j: Option<usize>) -> Outcome {
    let w = BinaryWord::parse(word)?;
    let t = extension_trace(&w, m)?;
    let d = index_decomposition(&t);
    let set = |s: &std::collections::BTreeSet<usize>| s.iter().copied().collect::<Vec<_>>();
    let mut totals = json!({
        "l": t.l(),
        "p": t.p(),
        "c": t.c,
        "full": t.full.to_string(),
        "bar": t.bar.to_string(),
        "hat": t.hat.to_string(),
        "I0": set(&d.i0), "IT": set(&d.it), "IH": set(&d.ih),
        "hat_I0": set(&d.hat_i0), "hat_IT": set(&d.hat_it), "hat_IH": set(&d.hat_ih),
    });
    let mut text = format!(
        "full {}\nbar  {}\nhat  {}\nc    {:?}\nl={} p={}\nI0={:?} IT={:?} IH={:?}\nI0^={:?} IT^={:?} IH^={:?}",
        t.full, t.bar, t.hat, t.c, t.l(), t.p(),
        set(&d.i0), set(&d.it), set(&d.ih),
        set(&d.hat_i0), set(&d.hat_it), set(&d.hat_ih),
    );
    let (header, rows, json_rows) = match j {
        None => {
            let header = strings(["i", "bar", "class", "hat", "hat_class"]);
            let mut rows = Vec::new();
            let mut json_rows = Vec::new();
            for i in 0..t.l() {
                let (bc, hc) = (class_label(d.bar_class(i)), class_label(d.hat_class(i)));
                rows.push(strings([
                    i.to_string(),
                    t.bar.bit(i).to_string(),
                    bc.to_string(),
                    t.hat.bit(i).to_string(),
                    hc.to_string(),
                ]));
                json_rows.push(json!({
                    "i": i, "bar": t.bar.bit(i), "class": bc,
                    "hat": t.hat.bit(i), "hat_class": hc,
                }));
            }
            (header, rows, json_rows)
        }
        Some(j) => {
            let plain = m_table(&t, &d, j, false)?;
            let hatted = m_table(&t, &d, j, true)?;
            let header = strings(["a", "b", "M", "M_hat"]);
            let mut rows = Vec::new();
            let mut json_rows = Vec::new();
            for (ai, a) in IndexClass::ALL.iter().enumerate() {
                for (bi, b) in IndexClass::ALL.iter().enumerate() {
                    let (x, y) = (&plain[ai][bi], &hatted[ai][bi]);
                    rows.push(strings([
                        a.label(),
                        b.label(),
                        &x.to_string(),
                        &y.to_string(),
                    ]));
                    json_rows.push(json!({
                        "a": a.label(), "b": b.label(),
                        "M": x.to_sorted_vec(), "M_hat": y.to_sorted_vec(),
                    }));
                }
            }
            let left = reassemble(&plain)?;
            totals["reassembled"] = json!(left.to_sorted_vec());
            text.push_str(&format!("\nreassembled L({}) = {left}", j - 1));
            (header, rows, json_rows)
        }
    };
    text = format!("{text}\n{}", table(&header, &rows));
    let params = json!({ "word": word, "m": m, "j": j });
    Ok(Rendered {
        json: envelope("trace", params, "rows", json_rows, totals),
        text,
        csv_header: header,
        csv_rows: rows,
        failed: false,
    })
}

/// `--seed-cap` replaces the default cap; the caller has warned already.
fn effective_cap(default: usize, seed_cap: Option<usize>) -> usize {
    seed_cap.unwrap_or(default)
}

fn cap_error(n: usize, cap: usize) -> Failure {
    Failure::Usage(format!(
        "n = {n} exceeds the size cap {cap}; pass --seed-cap {n} to override"
    ))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Space {
    Rho,
    Toggle,
    Z,
}

pub fn decompose_cmd(
    n: usize,
    m: usize,
    space: Space,
    mode: DecomposeMode,
    exec: Execution,
    seed_cap: Option<usize>,
) -> Outcome {
    let mode_name = match mode {
        DecomposeMode::Enumerate => "enumerate",
        DecomposeMode::Necklace => "necklace",
    };
    let space_name = match space {
        Space::Rho => "rho",
        Space::Toggle => "toggle",
        Space::Z => "z",
    };
    let params = json!({ "n": n, "m": m, "space": space_name, "mode": mode_name });
    let (header, rows, json_rows, words, orbits) = match space {
        Space::Rho => {
            let cap = effective_cap(DEFAULT_SPACE_CAP, seed_cap);
            if n > cap {
                return Err(cap_error(n, cap));
            }
            let opts = DecomposeOptions {
                mode,
                exec,
                max_n: cap,
            };
            let census = decompose_space_with(n, m, opts)?;
            let header = strings(["k", "representative", "bqw", "rw", "period"]);
            let mut rows = Vec::new();
            let mut json_rows = Vec::new();
            for o in &census {
                let p = encode(&o.representative, m)?;
                let (s, t) = orbit_size_factors(&o.representative, m)?;
                rows.push(vec![
                    p.k().to_string(),
                    o.representative.to_string(),
                    p.bqw().to_string(),
                    p.rw_string(),
                    format!("{t} x {s} = {}", o.size),
                ]);
                json_rows.push(json!({
                    "k": p.k(),
                    "representative": o.representative.to_string(),
                    "bqw": p.bqw().to_string(),
                    "rw": p.rw_string(),
                    "bqw_period": t,
                    "rw_period": s,
                    "size": o.size,
                }));
            }
            let words: usize = census.iter().map(|o| o.size).sum();
            (header, rows, json_rows, words, census.len())
        }
        Space::Toggle => {
            let cap = effective_cap(TOGGLE_CAP, seed_cap).min(ENUMERATION_CAP);
            if n > cap {
                return Err(cap_error(n, cap));
            }
            let census = decompose_x_with(n, m, exec)?;
            let header = strings(["representative", "tilde", "bqw", "rw", "period", "snakes"]);
            let mut rows = Vec::new();
            let mut json_rows = Vec::new();
            for o in &census {
                let tilde = o.tilde_base.as_ref().map(|t| t.to_string());
                let bqw = o.encoding.as_ref().map(|p| p.bqw().to_string());
                let rw = o.encoding.as_ref().map(|p| p.rw_string());
                let dash = |x: &Option<String>| x.clone().unwrap_or_else(|| "-".into());
                rows.push(vec![
                    o.representative.to_string(),
                    dash(&tilde),
                    dash(&bqw),
                    dash(&rw),
                    o.period.to_string(),
                    o.snakes.to_string(),
                ]);
                json_rows.push(json!({
                    "representative": o.representative.to_string(),
                    "tilde": tilde,
                    "bqw": bqw,
                    "rw": rw,
                    "period": o.period,
                    "snakes": o.snakes,
                }));
            }
            let words: usize = census.iter().map(|o| o.period).sum();
            (header, rows, json_rows, words, census.len())
        }
        Space::Z => {
            let cap = effective_cap(TOGGLE_CAP, seed_cap).min(ENUMERATION_CAP);
            if n > cap {
                return Err(cap_error(n, cap));
            }
            let census = decompose_z(n, m)?;
            let header = strings(["representative", "period"]);
            let rows: Vec<Vec<String>> = census
                .iter()
                .map(|o| vec![o.representative.to_string(), o.size.to_string()])
                .collect();
            let json_rows = census
                .iter()
                .map(
                    |o| json!({ "representative": o.representative.to_string(), "period": o.size }),
                )
                .collect();
            let words: usize = census.iter().map(|o| o.size).sum();
            (header, rows, json_rows, words, census.len())
        }
    };
    let experimental = space == Space::Z;
    let totals = json!({ "orbits": orbits, "words": words, "experimental": experimental });
    let mut text = format!("{}\n{orbits} orbits, {words} words", table(&header, &rows));
    if experimental {
        text.push_str(" (EXPERIMENTAL state space)");
    }
    Ok(Rendered {
        json: envelope("decompose", params, "rows", json_rows, totals),
        text,
        csv_header: header,
        csv_rows: rows,
        failed: false,
    })
}

pub fn verify_cmd(
    scope: Scope,
    ns: RangeInclusive<usize>,
    ms: RangeInclusive<usize>,
    exec: Execution,
) -> Outcome {
    let cap = if scope.is_toggle() { TOGGLE_CAP } else { 24 };
    if *ns.end() > cap {
        return Err(Failure::Usage(format!(
            "n range ends at {} but {scope} sweeps are capped at {cap}",
            ns.end()
        )));
    }
    if *ms.start() == 0 {
        return Err(Failure::Usage("m must be at least 1".into()));
    }
    let mut cells = Vec::new();
    let mut witnesses = Vec::new();
    for n in ns.clone() {
        for m in ms.clone() {
            if !in_domain(scope, n, m) {
                continue;
            }
            eprintln!("verify {scope}: n={n} m={m}");
            let s = run_sweep(scope, n..=n, m..=m, exec)?;
            cells.extend(s.cells);
            let room = grot_core::sweep::MAX_WITNESSES.saturating_sub(witnesses.len());
            witnesses.extend(s.witnesses.into_iter().take(room));
        }
    }
    let cases: usize = cells.iter().map(|c| c.cases).sum();
    let failed: usize = cells.iter().map(|c| c.failed).sum();
    let passed = failed == 0;
    let header = strings(["n", "m", "cases", "failed"]);
    let rows: Vec<Vec<String>> = cells
        .iter()
        .map(|c| strings([c.n, c.m, c.cases, c.failed]))
        .collect();
    let verdicts: Vec<Value> = cells
        .iter()
        .map(|c| json!({ "n": c.n, "m": c.m, "cases": c.cases, "failed": c.failed, "passed": c.failed == 0 }))
        .collect();
    let params = json!({
        "scope": scope.name(),
        "n": format!("{}..{}", ns.start(), ns.end()),
        "m": format!("{}..{}", ms.start(), ms.end()),
    });
    let totals = json!({
        "cases": cases,
        "failed": failed,
        "passed": passed,
        "experimental": scope.is_experimental(),
        "witnesses": witnesses,
    });
    let label = if scope.is_experimental() {
        " [EXPERIMENTAL]"
    } else {
        ""
    };
    let mut text = table(&header, &rows);
    for w in &witnesses {
        text.push_str(&format!("\nwitness: {w}"));
    }
    text.push_str(&format!(
        "\n{scope}{label}: {} ({cases} cases, {failed} failed)",
        if passed { "PASS" } else { "FAIL" }
    ));
    Ok(Rendered {
        json: envelope("verify", params, "verdicts", verdicts, totals),
        text,
        csv_header: header,
        csv_rows: rows,
        failed: !passed,
    })
}

fn snake_label(i: usize) -> char {
    const LABELS: &[u8] = b"abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789";
    LABELS.get(i).map(|&b| b as char).unwrap_or('*')
}

pub fn board_cmd(word: &str, m: usize) -> Outcome {
    let s = ToggleWord::parse(word, m)?;
    let board = orbit_board(&s)?;
    let snakes = find_snakes(&board)?;
    let width = board.width();
    let mut grid: Vec<Vec<char>> = board
        .rows()
        .iter()
        .map(|r| r.bits().iter().map(|_| '.').collect())
        .collect();
    for (i, sn) in snakes.iter().enumerate() {
        for &(r, c) in &sn.cells {
            grid[r][c] = snake_label(i);
        }
    }
    let sums = board.column_sums();
    let mut json_rows = Vec::new();
    let mut text_lines = Vec::new();
    for (i, row) in board.rows().iter().enumerate() {
        let labels: String = grid[i].iter().collect();
        text_lines.push(format!("{i:>4}  {row}  {labels}"));
        json_rows.push(json!({ "row": i, "word": row.to_string(), "labels": labels }));
    }
    let mut snake_json = Vec::new();
    let header = strings(["snake", "start_row", "composition", "tilde"]);
    let mut rows = Vec::new();
    for (i, sn) in snakes.iter().enumerate() {
        let tilde = sn.tilde(m).map(|t| t.to_string()).unwrap_or_default();
        let label = snake_label(i).to_string();
        rows.push(vec![
            label.clone(),
            sn.start_row().to_string(),
            sn.composition.to_string(),
            tilde.clone(),
        ]);
        snake_json.push(json!({
            "label": label,
            "start_row": sn.start_row(),
            "composition": sn.composition.parts(),
            "tilde": tilde,
        }));
    }
    let sums_text: Vec<String> = strings(&sums);
    let text = format!(
        "{}\ncolumn sums {}\n{} rows, {} columns, {} snakes\n{}",
        text_lines.join("\n"),
        sums_text.join(" "),
        board.q(),
        width,
        snakes.len(),
        table(&header, &rows)
    );
    let params = json!({ "word": word, "m": m });
    let totals = json!({ "q": board.q(), "column_sums": sums, "snakes": snake_json });
    Ok(Rendered {
        json: envelope("board", params, "rows", json_rows, totals),
        text,
        csv_header: header,
        csv_rows: rows,
        failed: false,
    })
}
