# SL2 Flow Module
