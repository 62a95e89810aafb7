use anyhow::Result;
use edgepoly::polytope::dimension;
use edgepoly::sweep::{check_graph, SweepConfig, Violation};
use edgepoly::{decide, AnalysisReport, Error, Graph};
use serde::Serialize;

#[derive(Serialize)]
pub struct AnalyzeOutput {
    pub dimension: usize,
    #[serde(flatten)]
    pub report: AnalysisReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleCheck>,
}

#[derive(Serialize)]
pub struct OracleCheck {
    pub components_checked: usize,
    /// Violations are reported in the labels of the component they concern.
    pub discrepancies: Vec<Violation>,
}

pub fn run(g: &Graph, oracle_cap: Option<usize>) -> Result<AnalyzeOutput> {
    let report = decide(g)?;
    let oracle = oracle_cap
        .map(|cap| cross_check(g, &report, cap))
        .transpose()?;
    Ok(AnalyzeOutput {
        dimension: dimension(g)?,
        report,
        oracle,
    })
}

fn cross_check(g: &Graph, report: &AnalysisReport, cap: usize) -> Result<OracleCheck> {
    let config = SweepConfig {
        oracle: true,
        max_oracle_d: cap,
        ..Default::default()
    };
    let mut discrepancies = Vec::new();
    for verdict in &report.components {
        let h = g.induced_subgraph(&verdict.vertices);
        if h.d() > cap {
            return Err(Error::CapExceeded {
                what: "oracle vertex count",
                got: h.d(),
                cap,
            }
            .into());
        }
        let outcome = check_graph(&h, &config);
        discrepancies.extend(outcome.violations);
    }
    Ok(OracleCheck {
        components_checked: report.components.len(),
        discrepancies,
    })
}
