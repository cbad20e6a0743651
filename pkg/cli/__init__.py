# command-line package
