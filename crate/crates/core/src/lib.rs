//! Certified 1-planar packings.

pub mod drawing;
pub mod graph;
pub mod planarity;
pub mod realize;
pub mod certificate;
pub mod tester;
pub mod leaf;
pub mod io;
pub mod svg;
pub mod packing;
pub mod few_crossings;
pub mod caterpillar;
pub mod quadruple;
pub mod dispatch;
