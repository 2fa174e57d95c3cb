# Verification Reports Module
