//! Rendering of a [`BlockAnswer`] as a text table or JSON.

use std::fmt::Write as _;

use rank1_stems::{BlockAnswer, ExtendedNat, GroupId};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LineRecord {
    pub start: i64,
    pub step: u32,
    pub mult: ExtendedNat,
    pub label: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorrectionRecord {
    pub degree: i64,
    pub amount: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockRecord {
    pub block: String,
    pub lines: Vec<LineRecord>,
    pub corrections: Vec<CorrectionRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub degree: i64,
    pub dim: ExtendedNat,
}

/// The machine-readable output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub group: String,
    pub rep: String,
    pub range: (i64, i64),
    pub blocks: Vec<BlockRecord>,
    pub table: Vec<TableRow>,
}

impl Report {
    pub fn new(answer: &BlockAnswer, lo: i64, hi: i64) -> Report {
        let blocks = answer
            .blocks
            .iter()
            .map(|b| BlockRecord {
                block: b.id.to_string(),
                lines: b
                    .lines
                    .lines()
                    .iter()
                    .map(|l| LineRecord {
                        start: l.start(),
                        step: l.step(),
                        mult: l.mult(),
                        label: l.label().to_string(),
                    })
                    .collect(),
                corrections: b
                    .lines
                    .corrections()
                    .iter()
                    .map(|c| CorrectionRecord { degree: c.degree, amount: c.amount })
                    .collect(),
            })
            .collect();
        Report {
            group: answer.group.name().to_string(),
            rep: answer.rep.to_string(),
            range: answer.range,
            blocks,
            table: answer.window(lo, hi).into_iter().map(|(degree, dim)| TableRow { degree, dim }).collect(),
        }
    }

    pub fn group_id(&self) -> Option<GroupId> {
        GroupId::from_name(&self.group)
    }

    pub fn dim(&self, degree: i64) -> Option<ExtendedNat> {
        self.table.iter().find(|r| r.degree == degree).map(|r| r.dim)
    }
}

fn line_text(l: &LineRecord) -> String {
    if l.step == 0 {
        format!("spot  {:>4}            mult {:<4} {}", l.start, l.mult, l.label)
    } else {
        format!(
            "line  {:>4}, {:>4}, ...  mult {:<4} {}",
            l.start,
            l.start + i64::from(l.step),
            l.mult,
            l.label
        )
    }
}

/// Human-readable rendering; `notes` are printed after the table.
pub fn render_text(report: &Report, with_blocks: bool, notes: &[String]) -> String {
    let mut out = String::new();
    let group = report.group_id().map_or(report.group.clone(), |g| g.to_string());
    writeln!(out, "group  {group}").unwrap();
    writeln!(out, "rep    {}", report.rep).unwrap();
    writeln!(out, "range  [{}, {}]", report.range.0, report.range.1).unwrap();
    writeln!(out).unwrap();
    writeln!(out, "degree  dim").unwrap();
    for row in &report.table {
        writeln!(out, "{:>6}  {}", row.degree, row.dim).unwrap();
    }
    if with_blocks {
        for block in &report.blocks {
            writeln!(out).unwrap();
            writeln!(out, "[{}]", block.block).unwrap();
            if block.lines.is_empty() {
                writeln!(out, "  (empty)").unwrap();
            }
            for l in &block.lines {
                writeln!(out, "  {}", line_text(l)).unwrap();
            }
            for c in &block.corrections {
                writeln!(out, "  minus {} in degree {}", c.amount, c.degree).unwrap();
            }
        }
    }
    for note in notes {
        writeln!(out).unwrap();
        writeln!(out, "note: {note}").unwrap();
    }
    out
}
