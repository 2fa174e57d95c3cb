# Command Line Module
