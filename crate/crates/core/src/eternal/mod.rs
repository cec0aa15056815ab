//! The eternal domination game in the one-guard-moves model: the safe family
//! of guard configurations, strategy evaluation and certificates for both
//! players.

mod family;
mod strategy;

pub use family::{
    eternal_domination_number, eternal_domination_number_from, is_eternal_dominating, meds_family, safe_family,
    FamilyCertificate, SafeFamily, MAX_CONFIGS,
};
pub use strategy::{
    attacker_move, evaluate_strategy, find_winning_attack, responses, survival_move, AttackSequence,
    StrategyOutcome, Verdict, WinningAttack, DEFAULT_ATTACK_BUDGET,
};
