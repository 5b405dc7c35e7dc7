def total(n):
    s = 0
    for i in range(n):
        s += i
    return s

def label(s):
    if s > 10:
        return "big"
    return "small"

n = int(input())
print(label(total(n)))
