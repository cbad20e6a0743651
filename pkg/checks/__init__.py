# verification package
