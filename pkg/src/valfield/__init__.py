# Valued Field Predicates Module
