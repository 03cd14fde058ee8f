# Tests package for pinclass
