m, n = map(int, input().split())
print (n*m)
