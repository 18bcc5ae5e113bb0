pub mod integer;
pub mod poly;
pub mod rational;
pub mod parser;
pub mod conic;
pub mod point;
pub mod elliptic;
pub mod division;
pub mod cubic;
pub mod etale;
pub mod padic;
