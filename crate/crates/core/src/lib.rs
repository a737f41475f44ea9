pub mod approx;
pub mod bounds;
pub mod digits;
pub mod error;
pub mod field;
pub mod ncf;
pub mod parse;
pub mod record;
pub mod verify;

pub use approx::{
    m_estimate, m_exact, m_exact_full, rho_lower_via_gamma_star, rho_search, s_values, MResult,
    SMode, SQuadruple,
};
pub use bounds::{bound_report, family, BoundReport, ETerm, FamilyKind, FamilyMember};
pub use digits::{DCouple, DigitSeq};
pub use error::{Error, Result};
pub use field::{ArithOp, QuadNum};
pub use ncf::{ConvergentState, NcfExpansion};
pub use parse::{parse_digit_seq, parse_expr, parse_ncf, parse_unit, parse_value, Expr};
pub use record::{ExactValue, Record};
