use serde::Serialize;
use sizeramsey::{bound_table, BoundVariant};

use crate::args::{BoundsArgs, Format, Global};
use crate::error::CliError;
use crate::output::{emit, real, render_rows};

/// Rows beyond this are refused; use `--points` for wide ranges.
pub const MAX_ROWS: usize = 100_000;

#[derive(Debug, Clone, Serialize)]
pub struct BoundsRow {
    pub r: u32,
    pub variant: &'static str,
    #[serde(serialize_with = "real")]
    pub coefficient: Option<f64>,
    #[serde(serialize_with = "real")]
    pub c: Option<f64>,
    pub is_lower_bound: bool,
    pub note: Option<&'static str>,
}

/// Integer `r` values from `from` to `to`: all of them, or `points`
/// log-spaced ones with duplicates dropped.
pub fn r_values(from: u32, to: u32, points: Option<usize>) -> Vec<u32> {
    match points {
        None => (from..=to).collect(),
        Some(k) if k <= 1 || from == to => vec![from],
        Some(k) => {
            let (a, b) = ((from as f64).ln(), (to as f64).ln());
            let mut out: Vec<u32> = (0..k)
                .map(|i| (a + (b - a) * i as f64 / (k - 1) as f64).exp().round() as u32)
                .map(|r| r.clamp(from, to))
                .collect();
            out.dedup();
            out
        }
    }
}

pub fn rows(rs: &[u32], c: Option<f64>) -> Result<Vec<BoundsRow>, CliError> {
    let variants = BoundVariant::ALL.map(|v| match v {
        BoundVariant::Krivelevich { .. } => BoundVariant::Krivelevich { c },
        other => other,
    });
    let mut out = Vec::with_capacity(rs.len() * variants.len());
    for &r in rs {
        for entry in bound_table(r, &variants)? {
            out.push(BoundsRow {
                r,
                variant: entry.variant.name(),
                coefficient: Some(entry.coefficient),
                c: entry.c,
                is_lower_bound: entry.is_lower_bound,
                note: entry.note,
            });
        }
    }
    Ok(out)
}

pub fn run(global: &Global, args: &BoundsArgs) -> Result<(), CliError> {
    let to = args.r_to.unwrap_or(args.r_from);
    if args.r_from < 2 || to < args.r_from {
        return Err(CliError::usage("need 2 <= --r <= --r-to"));
    }
    let rs = r_values(args.r_from, to, args.points);
    if rs.len() * BoundVariant::ALL.len() > MAX_ROWS {
        return Err(CliError::usage(format!(
            "{} values of r is too many rows; pass --points",
            rs.len()
        )));
    }
    let table = rows(&rs, args.c)?;
    crate::log(global, format!("bounds: {} row(s)", table.len()));
    emit(
        &render_rows(&table, crate::format_or(global, Format::Csv))?,
        global.out.as_deref(),
    )
}
