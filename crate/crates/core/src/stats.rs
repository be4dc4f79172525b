//! Rank correlation and mutual information between per-graph scores.
//!
//! Used to relate dimension estimates to an externally measured quantity
//! (for instance how badly an embedding method does on each graph).

use std::io::Read;

use serde::Serialize;

use crate::error::{Error, Result};

/// Paired observations with non-finite records removed.
#[derive(Debug, Clone, PartialEq)]
pub struct PairedSeries {
    names: Vec<String>,
    xs: Vec<f64>,
    ys: Vec<f64>,
    dropped: usize,
}

impl PairedSeries {
    /// Builds a series, dropping records where either value is not finite.
    pub fn new(names: Vec<String>, xs: Vec<f64>, ys: Vec<f64>) -> Result<PairedSeries> {
        if names.len() != xs.len() || xs.len() != ys.len() {
            return Err(Error::InvalidArgument(format!(
                "series lengths differ: {} names, {} xs, {} ys",
                names.len(),
                xs.len(),
                ys.len()
            )));
        }
        let mut series = PairedSeries {
            names: Vec::with_capacity(xs.len()),
            xs: Vec::with_capacity(xs.len()),
            ys: Vec::with_capacity(xs.len()),
            dropped: 0,
        };
        for ((name, x), y) in names.into_iter().zip(xs).zip(ys) {
            if x.is_finite() && y.is_finite() {
                series.names.push(name);
                series.xs.push(x);
                series.ys.push(y);
            } else {
                series.dropped += 1;
            }
        }
        if series.len() < 2 {
            return Err(Error::InvalidArgument(format!(
                "need at least 2 complete records, got {}",
                series.len()
            )));
        }
        Ok(series)
    }

    /// Unnamed series, for quick use.
    pub fn from_pairs(xs: &[f64], ys: &[f64]) -> Result<PairedSeries> {
        let names = (0..xs.len()).map(|i| i.to_string()).collect();
        PairedSeries::new(names, xs.to_vec(), ys.to_vec())
    }

    /// Reads CSV with a header containing `name`, `complexity` and `metric`
    /// columns; other columns are ignored. Unparseable or non-finite values
    /// (such as `inf` dimensions) count as dropped records.
    pub fn from_csv<R: Read>(reader: R) -> Result<PairedSeries> {
        let mut rdr = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(reader);
        let headers = rdr.headers().map_err(csv_error)?.clone();
        let column = |name: &str| {
            headers.iter().position(|h| h == name).ok_or_else(|| Error::Parse {
                line: 1,
                message: format!("missing column {name:?}"),
            })
        };
        let (name_col, x_col, y_col) = (column("name")?, column("complexity")?, column("metric")?);
        let (mut names, mut xs, mut ys) = (Vec::new(), Vec::new(), Vec::new());
        for record in rdr.records() {
            let record = record.map_err(csv_error)?;
            let value = |col: usize| {
                record
                    .get(col)
                    .and_then(|v| v.parse::<f64>().ok())
                    .unwrap_or(f64::NAN)
            };
            names.push(record.get(name_col).unwrap_or_default().to_string());
            xs.push(value(x_col));
            ys.push(value(y_col));
        }
        PairedSeries::new(names, xs, ys)
    }

    pub fn len(&self) -> usize {
        self.xs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.xs.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn xs(&self) -> &[f64] {
        &self.xs
    }

    pub fn ys(&self) -> &[f64] {
        &self.ys
    }

    /// Records removed for missing or non-finite values.
    pub fn dropped(&self) -> usize {
        self.dropped
    }

    /// The same records with the roles of `xs` and `ys` exchanged.
    pub fn swapped(&self) -> PairedSeries {
        PairedSeries {
            names: self.names.clone(),
            xs: self.ys.clone(),
            ys: self.xs.clone(),
            dropped: self.dropped,
        }
    }
}

fn csv_error(e: csv::Error) -> Error {
    let line = e.position().map_or(0, |p| p.line() as usize);
    Error::Parse {
        line,
        message: e.to_string(),
    }
}

/// 1-based ranks; tied values share the average of their ranks.
pub fn average_ranks(values: &[f64]) -> Vec<f64> {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
    let mut ranks = vec![0.0; values.len()];
    let mut start = 0;
    while start < order.len() {
        let mut end = start + 1;
        while end < order.len() && values[order[end]] == values[order[start]] {
            end += 1;
        }
        // Positions start..end hold ranks start+1..=end.
        let rank = (start + end + 1) as f64 / 2.0;
        for &i in &order[start..end] {
            ranks[i] = rank;
        }
        start = end;
    }
    ranks
}

fn pearson(xs: &[f64], ys: &[f64]) -> Result<f64> {
    let n = xs.len() as f64;
    let mean_x = xs.iter().sum::<f64>() / n;
    let mean_y = ys.iter().sum::<f64>() / n;
    let (mut sxx, mut syy, mut sxy) = (0.0, 0.0, 0.0);
    for (&x, &y) in xs.iter().zip(ys) {
        let (dx, dy) = (x - mean_x, y - mean_y);
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }
    if sxx == 0.0 {
        return Err(Error::UndefinedCorrelation("x"));
    }
    if syy == 0.0 {
        return Err(Error::UndefinedCorrelation("y"));
    }
    Ok((sxy / (sxx * syy).sqrt()).clamp(-1.0, 1.0))
}

/// Spearman's rank correlation: Pearson correlation of the average ranks.
pub fn spearman(series: &PairedSeries) -> Result<f64> {
    pearson(&average_ranks(&series.xs), &average_ranks(&series.ys))
}

/// Default histogram resolution, `floor(sqrt(N))` bins per axis.
pub fn default_bins(n: usize) -> usize {
    ((n as f64).sqrt().floor() as usize).max(2)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MutualInformation {
    pub value: f64,
    pub units: &'static str,
    pub bins: usize,
}

/// Equal-frequency bin of every value: bin `floor(r·B/N)` of the 0-based
/// average rank `r`, so ties always share a bin.
fn quantile_bins(values: &[f64], bins: usize) -> Vec<usize> {
    let n = values.len() as f64;
    average_ranks(values)
        .into_iter()
        .map(|r| (((r - 1.0) * bins as f64 / n).floor() as usize).min(bins - 1))
        .collect()
}

/// Plug-in mutual information, in nats, of the 2-D histogram with `bins`
/// equal-frequency bins per axis.
pub fn mutual_information(series: &PairedSeries, bins: usize) -> Result<MutualInformation> {
    let n = series.len();
    if bins < 2 {
        return Err(Error::InvalidArgument(format!(
            "need at least 2 bins, got {bins}"
        )));
    }
    if bins > n {
        return Err(Error::InvalidArgument(format!(
            "{bins} bins for {n} records"
        )));
    }
    let bx = quantile_bins(&series.xs, bins);
    let by = quantile_bins(&series.ys, bins);
    let mut joint = vec![0usize; bins * bins];
    let mut marg_x = vec![0usize; bins];
    let mut marg_y = vec![0usize; bins];
    for (&i, &j) in bx.iter().zip(&by) {
        joint[i * bins + j] += 1;
        marg_x[i] += 1;
        marg_y[j] += 1;
    }
    let total = n as f64;
    let mut value = 0.0;
    for i in 0..bins {
        for j in 0..bins {
            let c = joint[i * bins + j];
            if c == 0 {
                continue;
            }
            let ratio = (c * n) as f64 / (marg_x[i] * marg_y[j]) as f64;
            value += c as f64 / total * ratio.ln();
        }
    }
    Ok(MutualInformation {
        value: value.max(0.0),
        units: "nats",
        bins,
    })
}

/// Output of a correlation run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StatsReport {
    pub n: usize,
    pub spearman: f64,
    pub mi: f64,
    pub mi_units: &'static str,
    pub bins: usize,
    pub dropped: usize,
}

/// Spearman correlation and mutual information of a series. `bins`
/// defaults to [`default_bins`].
pub fn correlate(series: &PairedSeries, bins: Option<usize>) -> Result<StatsReport> {
    let bins = bins.unwrap_or_else(|| default_bins(series.len()));
    let mi = mutual_information(series, bins)?;
    Ok(StatsReport {
        n: series.len(),
        spearman: spearman(series)?,
        mi: mi.value,
        mi_units: mi.units,
        bins,
        dropped: series.dropped(),
    })
}
