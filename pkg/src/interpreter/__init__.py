# Input Parsing and Printing Module
