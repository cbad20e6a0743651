# Gopakumar-Vafa resummation package
