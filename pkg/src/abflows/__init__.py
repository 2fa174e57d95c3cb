# Additive, Multiplicative and Borel Flows Module
