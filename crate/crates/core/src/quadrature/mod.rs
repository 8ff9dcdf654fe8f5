//! Tanh-sinh integration and the log-tangent integrals built on it.

mod engine;
mod logtan;

pub use engine::{
    exp_sinh, sawtooth_integral, semi_infinite_rational, tanh_sinh, tanh_sinh_split, tanh_sinh_with,
    QuadOptions, QuadValue, QuadratureResult, DEFAULT_MAX_LEVEL,
};
pub use logtan::{
    check_printed_forms, cl2_via_integral, closed_I, closed_I_unreduced, combo, group_clausen, i7_closed, i7_numeric,
    integral_45, integral_45_charts, integral_A6, integral_A6_numeric, integral_I_numeric, logtan_minus_closed,
    logtan_panel_closed, logtan_panel_numeric, logtan_primitive, panels_numeric, printed_c1, printed_c2,
    seventh_clausen_sum, split_integrals_closed, split_integrals_numeric, CombinationId, CombinationRoute,
    Integral45Charts, PanelGroup, PanelSpec, PrintedFormCheck, SplitIntegrals,
};
