# Realization Oracle Module
