# Chain Families Package
