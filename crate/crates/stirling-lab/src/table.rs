//! The triangular table of signed Stirling numbers of the first kind,
//! tagged with the strategy that produced it, plus its CSV and JSON
//! serializations.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::exact::Integer;

/// Identifies which construction route filled a table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StrategyId {
    Triangular,
    RowHorizontal,
    RowFromAbove,
    ColumnVertical,
    VerticalFactorialPrinted,
    VerticalFactorialCorrected,
    Genfun,
    NestedHarmonic,
    HarmonicRecurrence,
    DiagonalExtension,
    FaaRoute,
}

impl StrategyId {
    pub const ALL: [StrategyId; 11] = [
        StrategyId::Triangular,
        StrategyId::RowHorizontal,
        StrategyId::RowFromAbove,
        StrategyId::ColumnVertical,
        StrategyId::VerticalFactorialPrinted,
        StrategyId::VerticalFactorialCorrected,
        StrategyId::Genfun,
        StrategyId::NestedHarmonic,
        StrategyId::HarmonicRecurrence,
        StrategyId::DiagonalExtension,
        StrategyId::FaaRoute,
    ];

    pub fn name(self) -> &'static str {
        match self {
            StrategyId::Triangular => "triangular",
            StrategyId::RowHorizontal => "row_horizontal",
            StrategyId::RowFromAbove => "row_from_above",
            StrategyId::ColumnVertical => "column_vertical",
            StrategyId::VerticalFactorialPrinted => "vertical_factorial_printed",
            StrategyId::VerticalFactorialCorrected => "vertical_factorial_corrected",
            StrategyId::Genfun => "genfun",
            StrategyId::NestedHarmonic => "nested_harmonic",
            StrategyId::HarmonicRecurrence => "harmonic_recurrence",
            StrategyId::DiagonalExtension => "diagonal_extension",
            StrategyId::FaaRoute => "faa_route",
        }
    }

    pub fn parse(text: &str) -> Option<StrategyId> {
        StrategyId::ALL.into_iter().find(|s| s.name() == text)
    }
}

impl std::fmt::Display for StrategyId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Triangular array of `s(n, k)` for `0 <= k <= n <= max_n`, stored flat
/// at index `n(n+1)/2 + k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedStirlingTable {
    max_n: usize,
    entries: Vec<Integer>,
    strategy: StrategyId,
}

impl SignedStirlingTable {
    /// Table containing only row 0 (`s(0,0) = 1`); rows are appended with
    /// [`push_row`](Self::push_row).
    pub fn seed(strategy: StrategyId) -> Self {
        Self {
            max_n: 0,
            entries: vec![Integer::from(1)],
            strategy,
        }
    }

    pub fn from_rows(rows: Vec<Vec<Integer>>, strategy: StrategyId) -> Self {
        assert!(!rows.is_empty());
        let mut table = Self::seed(strategy);
        let mut iter = rows.into_iter();
        let row0 = iter.next().unwrap();
        assert_eq!(row0, vec![Integer::from(1)], "row 0 must be [1]");
        for row in iter {
            table.push_row(row);
        }
        table
    }

    /// Appends row `max_n + 1`; the row must have `max_n + 2` entries.
    pub fn push_row(&mut self, row: Vec<Integer>) {
        assert_eq!(
            row.len(),
            self.max_n + 2,
            "row {} must have {} entries",
            self.max_n + 1,
            self.max_n + 2
        );
        self.entries.extend(row);
        self.max_n += 1;
    }

    pub fn max_n(&self) -> usize {
        self.max_n
    }

    pub fn strategy(&self) -> StrategyId {
        self.strategy
    }

    /// `s(n, k)`; panics outside the triangle.
    pub fn get(&self, n: usize, k: usize) -> &Integer {
        assert!(k <= n && n <= self.max_n, "s({n},{k}) outside table (max_n = {})", self.max_n);
        &self.entries[n * (n + 1) / 2 + k]
    }

    /// `s(n, k)` with the convention `s(n, k) = 0` for `k > n`.
    pub fn value_or_zero(&self, n: usize, k: usize) -> Integer {
        if k > n {
            Integer::zero()
        } else {
            self.get(n, k).clone()
        }
    }

    /// Row `n` as a slice, entries `s(n, 0) .. s(n, n)`.
    pub fn row(&self, n: usize) -> &[Integer] {
        assert!(n <= self.max_n);
        let base = n * (n + 1) / 2;
        &self.entries[base..base + n + 1]
    }

    /// True iff the two tables hold identical values (strategy tags may differ).
    pub fn same_values(&self, other: &Self) -> bool {
        self.max_n == other.max_n && self.entries == other.entries
    }

    /// CSV serialization: one `n,k,value` line per entry, row-major.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for n in 0..=self.max_n {
            for (k, v) in self.row(n).iter().enumerate() {
                out.push_str(&format!("{n},{k},{v}\n"));
            }
        }
        out
    }

    /// JSON serialization with decimal-string entries; deterministic output.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&TableJson::from(self)).expect("table serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self, String> {
        let parsed: TableJson =
            serde_json::from_str(text).map_err(|e| format!("malformed table JSON: {e}"))?;
        parsed.try_into()
    }
}

#[derive(Serialize, Deserialize)]
struct TableJson {
    max_n: usize,
    strategy: String,
    entries: Vec<Vec<String>>,
}

impl From<&SignedStirlingTable> for TableJson {
    fn from(table: &SignedStirlingTable) -> Self {
        TableJson {
            max_n: table.max_n,
            strategy: table.strategy.name().to_owned(),
            entries: (0..=table.max_n)
                .map(|n| table.row(n).iter().map(|v| v.to_string()).collect())
                .collect(),
        }
    }
}

impl TryFrom<TableJson> for SignedStirlingTable {
    type Error = String;

    fn try_from(json: TableJson) -> Result<Self, String> {
        let strategy = StrategyId::parse(&json.strategy)
            .ok_or_else(|| format!("unknown strategy {:?}", json.strategy))?;
        if json.entries.len() != json.max_n + 1 {
            return Err(format!(
                "expected {} rows, found {}",
                json.max_n + 1,
                json.entries.len()
            ));
        }
        let mut entries = Vec::with_capacity((json.max_n + 1) * (json.max_n + 2) / 2);
        for (n, row) in json.entries.iter().enumerate() {
            if row.len() != n + 1 {
                return Err(format!("row {n} must have {} entries", n + 1));
            }
            for v in row {
                let value: Integer = v
                    .parse()
                    .map_err(|_| format!("bad integer literal {v:?} in row {n}"))?;
                entries.push(value);
            }
        }
        Ok(SignedStirlingTable {
            max_n: json.max_n,
            entries,
            strategy,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn toy_table() -> SignedStirlingTable {
        // rows 0..2 of the signed triangle
        let mut t = SignedStirlingTable::seed(StrategyId::Triangular);
        t.push_row(vec![Integer::from(0), Integer::from(1)]);
        t.push_row(vec![Integer::from(0), Integer::from(-1), Integer::from(1)]);
        t
    }

    #[test]
    fn indexing_and_conventions() {
        let t = toy_table();
        assert_eq!(t.get(2, 1), &Integer::from(-1));
        assert_eq!(t.value_or_zero(1, 2), Integer::from(0));
        assert_eq!(t.row(2), &[Integer::from(0), Integer::from(-1), Integer::from(1)]);
    }

    #[test]
    fn csv_rendering() {
        assert_eq!(toy_table().to_csv(), "0,0,1\n1,0,0\n1,1,1\n2,0,0\n2,1,-1\n2,2,1\n");
    }

    #[test]
    fn json_round_trip() {
        let t = toy_table();
        let json = t.to_json();
        let back = SignedStirlingTable::from_json(&json).unwrap();
        assert_eq!(t, back);
        // deterministic serialization
        assert_eq!(json, back.to_json());
    }

    #[test]
    fn json_rejects_ragged_rows() {
        let bad = r#"{"max_n":1,"strategy":"triangular","entries":[["1"],["0"]]}"#;
        assert!(SignedStirlingTable::from_json(bad).is_err());
    }
}
