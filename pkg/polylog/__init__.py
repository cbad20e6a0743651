# polylogarithm package
