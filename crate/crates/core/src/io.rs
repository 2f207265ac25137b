//! Comma-separated design files.
//!
//! One header line names the columns: `x1..xm` (proportions) or `a1..am`
//! (amounts), then the PWO columns `z12, z13, ...` if the design is
//! expanded, then `A` if totals are attached. Rational mode round-trips
//! exactly; decimal mode is for display.

use std::fmt::Write as _;

use num_traits::{Signed, ToPrimitive, Zero};

use crate::design::{Design, DesignPoint, PointKind, Ratio};
use crate::error::{Error, Result};
use crate::models::{pwo_label, ModelMatrix};
use crate::oofa::{ordering_from_pwo, pairs, OofARun, PwoVector};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DesignFormat {
    /// Reduced fractions such as `2/3`; lossless.
    #[default]
    Rational,
    /// Half-up rounding to this many decimals. Integers print bare.
    Decimals(usize),
}

/// Header names for a design's columns.
pub fn header(design: &Design) -> Vec<String> {
    let m = design.m();
    let prefix = design.kind().prefix();
    let mut cols: Vec<String> = (1..=m).map(|i| format!("{prefix}{i}")).collect();
    if design.is_expanded() {
        cols.extend(pairs(m).into_iter().map(|(j, k)| pwo_label(j, k)));
    }
    if design.has_amounts() {
        cols.push("A".into());
    }
    cols
}

/// Renders `value` in `format`.
pub fn format_value(value: Ratio, format: DesignFormat) -> String {
    match format {
        DesignFormat::Rational => value.to_string(),
        DesignFormat::Decimals(k) => format_decimal(value, k),
    }
}

fn format_decimal(value: Ratio, k: usize) -> String {
    if value.is_integer() {
        return value.to_integer().to_string();
    }
    let pow = 10i128.pow(k as u32);
    let n = i128::from(*value.numer()) * pow;
    let d = i128::from(*value.denom());
    // Half-up on the magnitude, sign restored afterwards.
    let mag = (2 * n.abs() + d) / (2 * d);
    let sign = if n < 0 && mag != 0 { "-" } else { "" };
    if k == 0 {
        return format!("{sign}{mag}");
    }
    let int = mag / pow;
    let frac = mag % pow;
    format!("{sign}{int}.{frac:0k$}")
}

pub fn write_design(design: &Design, format: DesignFormat) -> String {
    let mut out = header(design).join(",");
    out.push('\n');
    for run in design.runs() {
        let mut cells: Vec<String> = run
            .point()
            .values()
            .iter()
            .map(|&v| format_value(v, format))
            .collect();
        if let Some(pwo) = run.pwo() {
            cells.extend(pwo.signs().iter().map(|s| s.to_string()));
        }
        if let Some(a) = run.amount() {
            cells.push(format_value(a, format));
        }
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

/// Parses `2/3`, `-1`, `0.675` or `.5` exactly.
pub fn parse_ratio(s: &str) -> Option<Ratio> {
    let s = s.trim();
    if s.is_empty() {
        return None;
    }
    if s.contains('/') {
        return s.parse::<Ratio>().ok();
    }
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    let (int, frac) = body.split_once('.').unwrap_or((body, ""));
    if int.is_empty() && frac.is_empty() {
        return None;
    }
    if !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let digits = format!("{int}{frac}");
    let numer: i64 = if digits.is_empty() {
        0
    } else {
        digits.parse().ok()?
    };
    let denom = 10i64.checked_pow(frac.len() as u32)?;
    let r = Ratio::new(numer, denom);
    Some(if neg { -r } else { r })
}

struct Layout {
    m: usize,
    kind: PointKind,
    has_pwo: bool,
    has_amount: bool,
}

fn parse_header(line: &str) -> Result<Layout> {
    let cols: Vec<&str> = line.split(',').map(str::trim).collect();
    let bad = |msg: String| Error::MalformedHeader(msg);
    let first = cols.first().copied().unwrap_or("");
    let kind = match first.chars().next() {
        Some('x') => PointKind::Proportion,
        Some('a') => PointKind::Amount,
        _ => {
            return Err(bad(format!(
                "first column must be x1 or a1, found {first:?}"
            )))
        }
    };
    let prefix = kind.prefix();
    let m = cols
        .iter()
        .take_while(|c| c.starts_with(prefix) && c[1..].parse::<usize>().is_ok())
        .count();
    for (i, c) in cols[..m].iter().enumerate() {
        if *c != format!("{prefix}{}", i + 1) {
            return Err(bad(format!("expected {prefix}{}, found {c:?}", i + 1)));
        }
    }
    let mut rest = &cols[m..];
    let has_amount = rest.last() == Some(&"A");
    if has_amount {
        rest = &rest[..rest.len() - 1];
    }
    let has_pwo = !rest.is_empty();
    if has_pwo {
        let expected: Vec<String> = pairs(m).into_iter().map(|(j, k)| pwo_label(j, k)).collect();
        if rest.len() != expected.len() || rest.iter().zip(&expected).any(|(a, b)| a != b) {
            return Err(bad(format!(
                "PWO columns must be {} in order, found {}",
                expected.join(","),
                rest.join(",")
            )));
        }
    }
    Ok(Layout {
        m,
        kind,
        has_pwo,
        has_amount,
    })
}

/// Parses a design file. Orderings are reconstructed from the PWO signs,
/// which must be masked and transitive for each row's support.
pub fn read_design(text: &str) -> Result<Design> {
    let mut lines = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty());
    let (_, head) = lines
        .next()
        .ok_or_else(|| Error::MalformedHeader("empty input".into()))?;
    let layout = parse_header(head)?;
    let m = layout.m;
    let n_pairs = if layout.has_pwo { pairs(m).len() } else { 0 };
    let width = m + n_pairs + usize::from(layout.has_amount);

    let mut runs = Vec::new();
    for (idx, line) in lines {
        let line_no = idx + 1;
        let cells: Vec<&str> = line.split(',').map(str::trim).collect();
        if cells.len() != width {
            return Err(Error::RowLengthMismatch {
                line: line_no,
                expected: width,
                found: cells.len(),
            });
        }
        let invalid = |reason: String| Error::InvalidRow {
            line: line_no,
            reason,
        };
        let values = cells[..m]
            .iter()
            .map(|c| parse_ratio(c).ok_or_else(|| invalid(format!("not a number: {c:?}"))))
            .collect::<Result<Vec<_>>>()?;
        let point = DesignPoint::new(values, layout.kind).map_err(|e| invalid(e.to_string()))?;
        let amount = if layout.has_amount {
            let c = cells[width - 1];
            let a = parse_ratio(c).ok_or_else(|| invalid(format!("not a number: {c:?}")))?;
            if a.is_negative() {
                return Err(invalid(format!("negative total {a}")));
            }
            if layout.kind == PointKind::Amount && a != point.sum() {
                return Err(invalid(format!(
                    "A = {a} but amounts sum to {}",
                    point.sum()
                )));
            }
            Some(a)
        } else {
            None
        };
        let run = if layout.has_pwo {
            let signs = cells[m..m + n_pairs]
                .iter()
                .map(|c| match *c {
                    "1" | "+1" => Ok(1),
                    "0" | "-0" => Ok(0),
                    "-1" => Ok(-1),
                    _ => Err(Error::BadPwoValue {
                        line: line_no,
                        value: (*c).to_string(),
                    }),
                })
                .collect::<Result<Vec<i8>>>()?;
            let pwo = PwoVector::from_signs(signs);
            let ordering = ordering_from_pwo(&point.support(), m, &pwo).map_err(|e| {
                Error::InconsistentPwoRow {
                    line: line_no,
                    reason: match e {
                        Error::InconsistentPwo(msg) => msg,
                        other => other.to_string(),
                    },
                }
            })?;
            OofARun::ordered(point, ordering, amount)?
        } else {
            match amount {
                Some(a) if layout.kind == PointKind::Proportion => {
                    OofARun::base(point).with_amount(a)
                }
                _ => OofARun::base(point),
            }
        };
        runs.push(run);
    }
    Design::new(m, layout.kind, runs)
}

/// Model matrix as CSV with the term labels as header.
pub fn write_matrix(mm: &ModelMatrix) -> String {
    let mut out = mm.col_labels.join(",");
    out.push('\n');
    for row in mm.x.row_iter() {
        let cells: Vec<String> = row.iter().map(|v| format_float(*v)).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

/// Shortest round-trip rendering, with `-0` normalized to `0`.
pub fn format_float(v: f64) -> String {
    if v.is_zero() {
        return "0".into();
    }
    let mut s = String::new();
    write!(s, "{v}").unwrap();
    s
}

/// Approximate decimal value of a ratio, for messages and reports.
pub fn ratio_to_f64(r: Ratio) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}
