use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use ddqpc_core::ScenarioResult;

use crate::format::fmt_real;
use crate::CliError;

/// Header, one row per grid point, then `#` lines echoing the config and
/// the summary scalars. Undetermined summary values print as `NaN`.
pub fn write_csv_to<W: Write>(result: &ScenarioResult, sink: W) -> std::io::Result<()> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(sink);
    let mut header = vec![result.abscissa.as_str()];
    header.extend(result.column_names());
    w.write_record(&header)?;
    for (i, x) in result.grid.iter().enumerate() {
        let row = std::iter::once(*x).chain(result.columns.iter().map(|c| c.values[i]));
        w.write_record(row.map(fmt_real))?;
    }
    let mut sink = w.into_inner().map_err(|e| e.into_error())?;
    for (k, v) in &result.metadata {
        writeln!(sink, "# config.{k} = {v}")?;
    }
    for (k, v) in &result.summary {
        writeln!(sink, "# summary.{k} = {}", fmt_real(v.unwrap_or(f64::NAN)))?;
    }
    sink.flush()
}

pub fn write_csv(result: &ScenarioResult, sink: &Path) -> Result<(), CliError> {
    let file = File::create(sink).map_err(|e| CliError::io(sink, e))?;
    write_csv_to(result, BufWriter::new(file)).map_err(|e| CliError::io(sink, e))
}
