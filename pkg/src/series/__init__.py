# Laurent Series Module
