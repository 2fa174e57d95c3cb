# Realization Field Module
