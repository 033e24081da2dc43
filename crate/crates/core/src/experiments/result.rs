use super::config::Scenario;

/// A named series aligned with [`ScenarioResult::grid`].
#[derive(Debug, Clone, PartialEq)]
pub struct Column {
    pub name: String,
    pub values: Vec<f64>,
}

/// Output of one scenario run.
///
/// Every column shares `grid`, whose name is `abscissa` (`"tau"` for time
/// series, `"alpha"` for the coupling sweep). Summary scalars that could
/// not be determined (e.g. a threshold never reached) are `None`.
#[derive(Debug, Clone, PartialEq)]
pub struct ScenarioResult {
    pub scenario: Scenario,
    pub abscissa: String,
    pub grid: Vec<f64>,
    pub columns: Vec<Column>,
    pub metadata: Vec<(String, String)>,
    pub summary: Vec<(String, Option<f64>)>,
}

impl ScenarioResult {
    pub(crate) fn new(scenario: Scenario, abscissa: &str, grid: Vec<f64>) -> Self {
        Self {
            scenario,
            abscissa: abscissa.to_string(),
            grid,
            columns: Vec::new(),
            metadata: Vec::new(),
            summary: Vec::new(),
        }
    }

    pub(crate) fn push_column(&mut self, name: impl Into<String>, values: Vec<f64>) {
        debug_assert_eq!(values.len(), self.grid.len(), "column length must match the grid");
        self.columns.push(Column { name: name.into(), values });
    }

    pub(crate) fn push_summary(&mut self, name: impl Into<String>, value: Option<f64>) {
        self.summary.push((name.into(), value));
    }

    pub fn column(&self, name: &str) -> Option<&[f64]> {
        self.columns.iter().find(|c| c.name == name).map(|c| c.values.as_slice())
    }

    /// `None` both for unknown names and for undetermined values.
    pub fn summary_value(&self, name: &str) -> Option<f64> {
        self.summary.iter().find(|(k, _)| k == name).and_then(|(_, v)| *v)
    }

    pub fn column_names(&self) -> Vec<&str> {
        self.columns.iter().map(|c| c.name.as_str()).collect()
    }
}
