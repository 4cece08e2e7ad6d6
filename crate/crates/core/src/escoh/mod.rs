//! Lie bases, wedge calculus, the matrix `𝒫`, its closed forms, and the
//! pairing behind the cup product of Eichler-Shimura classes.

pub mod closed_form;
pub mod lie;
pub mod pairing;
pub mod script_p;
pub mod wedge;
