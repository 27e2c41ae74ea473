//! Both sides of every identity this crate checks, and the drivers that
//! compare them over ranges of parameters.
//!
//! The Bell-form identities all read `B_k(a_1, ..., a_k) = closed form` for a
//! rule `i -> a_i` depending on a parameter `eps`. Their left sides are
//! evaluated three ways (partial Bell sum, unrestricted multi-index sum and
//! the exponential generating function) and the routes must agree before the
//! closed form is even looked at. Everything is exact, so a case passes only
//! when both sides reduce to the same fraction.

mod appendix;
mod crosscheck;
mod expansions;
mod report;
mod theorems;

use std::fmt;
use std::time::Instant;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::arith::Rational;
use crate::bell::BellError;

pub use appendix::{appendix_expansion_coefficient, verify_appendix, APPENDIX_SCALING_SAMPLES};
pub(crate) use crosscheck::random_rational;
pub use crosscheck::{
    bridge_binomial_sum, bridge_central_factorial_sum, bridge_power_sum, verify_bridges, verify_consistency,
    verify_oracles, verify_remarks,
};
pub use expansions::{verify_classical, verify_filomat};
pub use report::{CaseResult, IdentityCase, VerificationReport};
pub use theorems::{build_theorem_args, closed_form_rhs, lhs_bell, multi_index_sum, verify_identity};

macro_rules! identity_ids {
    ($($variant:ident => $name:literal),* $(,)?) => {
        /// Every identity the suite knows about. The declaration order is
        /// the order cases appear in reports.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum IdentityId {
            $($variant),*
        }

        impl IdentityId {
            pub const ALL: &'static [IdentityId] = &[$(IdentityId::$variant),*];

            pub fn as_str(self) -> &'static str {
                match self {
                    $(IdentityId::$variant => $name),*
                }
            }

            pub fn parse(s: &str) -> Option<IdentityId> {
                match s {
                    $($name => Some(IdentityId::$variant),)*
                    _ => None,
                }
            }
        }
    };
}

identity_ids! {
    HoffmanT1 => "HOFFMAN_T1",
    GencevT2 => "GENCEV_T2",
    GencevT3 => "GENCEV_T3",
    GencevT4 => "GENCEV_T4",
    HeqiT4 => "HEQI_T4",
    HeqiT5 => "HEQI_T5",
    HeqiT6 => "HEQI_T6",
    HeqiT7 => "HEQI_T7",
    HeqiT8 => "HEQI_T8",
    HeqiT9 => "HEQI_T9",
    XuT10 => "XU_T10",
    XuT11 => "XU_T11",
    XuT12 => "XU_T12",
    FilomatEven => "FILOMAT_EVEN",
    FilomatOdd => "FILOMAT_ODD",
    FilomatBinomSum => "FILOMAT_BINOM_SUM",
    Appendix1114 => "APPENDIX_1114",
    Appendix1114Bell => "APPENDIX_1114_BELL",
    AppendixGould => "APPENDIX_GOULD",
    AppendixReflection => "APPENDIX_REFLECTION",
    AppendixHalfFalling => "APPENDIX_HALF_FALLING",
    AppendixScaling => "APPENDIX_SCALING",
    ClassicalLnSinc => "CLASSICAL_LN_SINC",
    ClassicalLnSinhc => "CLASSICAL_LN_SINHC",
    ClassicalCsc => "CLASSICAL_CSC",
    ClassicalCsch => "CLASSICAL_CSCH",
    ClassicalLnCos => "CLASSICAL_LN_COS",
    ClassicalSec => "CLASSICAL_SEC",
    ClassicalLnOnePlusSqrt => "CLASSICAL_LN_ONE_PLUS_SQRT",
    ClassicalBinomial => "CLASSICAL_BINOMIAL",
    ClassicalCatalanGf => "CLASSICAL_CATALAN_GF",
    ClassicalSinhcHalfRoot => "CLASSICAL_SINHC_HALF_ROOT",
    ClassicalCoshHalfRoot => "CLASSICAL_COSH_HALF_ROOT",
    RemarkBernoulliOdd => "REMARK_BERNOULLI_ODD",
    RemarkEulerOdd => "REMARK_EULER_ODD",
    RemarkSincPower => "REMARK_SINC_POWER",
    RemarkSincPowerT => "REMARK_SINC_POWER_T",
    RemarkCosPower => "REMARK_COS_POWER",
    RemarkCosPowerT => "REMARK_COS_POWER_T",
    RemarkBernoulliMinusOne => "REMARK_B_MINUS_ONE",
    RemarkBernoulliOne => "REMARK_B_ONE",
    RemarkEulerMinusOne => "REMARK_E_MINUS_ONE",
    RemarkEulerOne => "REMARK_E_ONE",
    ConsistencyT7T10 => "CONSISTENCY_T7_T10",
    ConsistencyT8T11 => "CONSISTENCY_T8_T11",
    ConsistencyT9T12 => "CONSISTENCY_T9_T12",
    ConsistencyT4T7Args => "CONSISTENCY_T4_T7_ARGS",
    ConsistencyT5T8Args => "CONSISTENCY_T5_T8_ARGS",
    ConsistencyT6T9Args => "CONSISTENCY_T6_T9_ARGS",
    ConsistencyT4T7 => "CONSISTENCY_T4_T7",
    ConsistencyT5T8 => "CONSISTENCY_T5_T8",
    ConsistencyT6T9 => "CONSISTENCY_T6_T9",
    BridgeBernoulli => "BRIDGE_BERNOULLI",
    BridgeEuler => "BRIDGE_EULER",
    BridgeBinomial => "BRIDGE_BINOMIAL",
    OraclePartialBell => "ORACLE_PARTIAL_BELL",
    OracleCompleteBell => "ORACLE_COMPLETE_BELL",
    OracleFaaDiBruno => "ORACLE_FAA_DI_BRUNO",
}

impl IdentityId {
    /// The identities of the form `B_k(args(eps)) = closed form`, plus the
    /// raw multi-index sums they reformulate.
    pub const THEOREMS: &'static [IdentityId] = &[
        IdentityId::HoffmanT1,
        IdentityId::GencevT2,
        IdentityId::GencevT3,
        IdentityId::GencevT4,
        IdentityId::HeqiT4,
        IdentityId::HeqiT5,
        IdentityId::HeqiT6,
        IdentityId::HeqiT7,
        IdentityId::HeqiT8,
        IdentityId::HeqiT9,
        IdentityId::XuT10,
        IdentityId::XuT11,
        IdentityId::XuT12,
    ];

    pub fn is_theorem(self) -> bool {
        Self::THEOREMS.contains(&self)
    }

    /// Identities whose closed form is only asserted for `eps = 1` and `eps = -1`.
    pub fn unit_epsilon_only(self) -> bool {
        matches!(
            self,
            IdentityId::GencevT2
                | IdentityId::GencevT3
                | IdentityId::GencevT4
                | IdentityId::HeqiT4
                | IdentityId::HeqiT5
                | IdentityId::HeqiT6
        )
    }

    /// Smallest degree the identity is asserted for (0 or 1).
    pub fn min_k(self) -> usize {
        match self {
            IdentityId::HoffmanT1
            | IdentityId::GencevT4
            | IdentityId::HeqiT6
            | IdentityId::HeqiT7
            | IdentityId::XuT12 => 1,
            _ => 0,
        }
    }

    /// Whether the identity takes `eps` at all.
    pub fn takes_epsilon(self) -> bool {
        self.is_theorem() && self != IdentityId::HoffmanT1
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for IdentityId {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SuiteError {
    #[error("{0} is not a Bell-form identity")]
    NotBellForm(IdentityId),
    #[error("{id} is only stated for eps = 1 or eps = -1, got {eps}")]
    UnsupportedEpsilon { id: IdentityId, eps: Box<Rational> },
    #[error("{id} needs a value of eps")]
    MissingEpsilon { id: IdentityId },
    #[error("{id} is not stated for k = {k}")]
    DegreeOutOfRange { id: IdentityId, k: usize },
    #[error("left-side routes disagree: partial-sum {}, egf {}, multi-index {}", .0[0], .0[1], .0[2])]
    RouteDisagreement(Box<[Rational; 3]>),
    #[error(transparent)]
    Bell(#[from] BellError),
}

/// Runs `f` over `cases` (in parallel) and assembles a sorted report.
pub(crate) fn run_cases<T, F>(suite: &str, inputs: Vec<T>, f: F) -> VerificationReport
where
    T: Send + Sync,
    F: Fn(&T) -> CaseResult + Send + Sync,
{
    use rayon::prelude::*;
    let start = Instant::now();
    let cases: Vec<CaseResult> = inputs.par_iter().map(&f).collect();
    VerificationReport::new(suite, cases, start.elapsed())
}

/// `eps / 2`.
pub(crate) fn half(eps: &Rational) -> Rational {
    eps * Rational::frac(1, 2)
}

/// `2 eps`.
pub(crate) fn double(eps: &Rational) -> Rational {
    eps * Rational::from(2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_round_trip_through_names() {
        for &id in IdentityId::ALL {
            assert_eq!(IdentityId::parse(id.as_str()), Some(id));
        }
        assert_eq!(IdentityId::parse("NOPE"), None);
        assert_eq!(serde_json::to_string(&IdentityId::XuT12).unwrap(), "\"XU_T12\"");
    }
}
